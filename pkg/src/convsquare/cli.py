"""Command line interface.

Three subcommands:

  verify   reproduce a named construction at a given modulus and report
           each numerical check
  table    print catalog records (one modulus, a range summary, or an
           algebraic family), optionally re-deriving each row
  search   run the multistart solver for one value, a fixed-point probe,
           or the full degree-10 family probe

Exit codes: 0 all checks passed / witnesses found, 1 a check failed or
nothing was found, 2 usage or domain errors (e.g. an even modulus).

--format json prints a single JSON document that round-trips byte
identically through json.loads/json.dumps with sorted keys.  The search
seed defaults to the CONVSQUARE_SEED environment variable, then 0.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time

from . import arith, catalog, characters, group_core, solver, theta
from .errors import ContractViolation, DomainError
from .gaussians import gaussian_fixed_point_witness
from .group_core import conj_fourier, fixed_point_rescale, reindex

__all__ = ["main", "build_parser"]


# ------------------------------------------------------------ report plumbing

def _new_doc(command: str, inputs: dict) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "checks": [],
        "extras": {},
        "witnesses": None,
        "seed": inputs.get("seed"),
        "timing_seconds": 0.0,
        "pass": True,
    }


def _add_check(doc: dict, name: str, residual: float, tolerance: float) -> bool:
    ok = bool(residual <= tolerance)
    doc["checks"].append(
        {"name": name, "residual": float(residual), "tolerance": float(tolerance),
         "pass": ok}
    )
    doc["pass"] = doc["pass"] and ok
    return ok


def _add_flag(doc: dict, name: str, ok: bool) -> bool:
    doc["checks"].append(
        {"name": name, "residual": 0.0 if ok else 1.0, "tolerance": 0.5,
         "pass": bool(ok)}
    )
    doc["pass"] = doc["pass"] and bool(ok)
    return bool(ok)


def _complex_json(z: complex) -> list:
    return [float(z.real), float(z.imag)]


def _witnesses_json(ws) -> list:
    return [[_complex_json(complex(v)) for v in w.values] for w in ws]


def _fmt_c(z: complex) -> str:
    return f"{z.real:+.6f}{z.imag:+.6f}i"


def _cell(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, float):
        return f"{v:.6f}"
    if isinstance(v, list) and len(v) == 2:
        return _fmt_c(complex(v[0], v[1]))
    return str(v)


def _render_human(doc: dict, out) -> None:
    for key, val in doc["extras"].items():
        out.write(f"{key}: {val}\n")
    rows = doc.get("table")
    if rows:
        cols = list(rows[0].keys())
        widths = {
            c: max(len(str(c)), max(len(_cell(r[c])) for r in rows)) for c in cols
        }
        out.write("  ".join(str(c).ljust(widths[c]) for c in cols) + "\n")
        for r in rows:
            out.write("  ".join(_cell(r[c]).ljust(widths[c]) for c in cols) + "\n")
    for c in doc["checks"]:
        tag = "PASS" if c["pass"] else "FAIL"
        out.write(
            f"{tag} {c['name']:<42s} residual={c['residual']:.3e} "
            f"tol={c['tolerance']:.1e}\n"
        )
    if doc["witnesses"]:
        out.write(f"witnesses: {len(doc['witnesses'])}\n")
    out.write(
        f"overall: {'PASS' if doc['pass'] else 'FAIL'} "
        f"({doc['timing_seconds']:.2f}s)\n"
    )


def _emit(doc: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(doc, sort_keys=True, indent=1) + "\n")
    else:
        _render_human(doc, out)


# ------------------------------------------------------------ verify

def _verify_gaussian_cmd(d: int, doc: dict) -> None:
    lam, f, q = gaussian_fixed_point_witness(d, "plus")
    doc["extras"]["plus branch lam"] = _fmt_c(lam)
    _add_check(doc, "plus: criticality",
               group_core.criticality_residual(f, lam), 1e-9)
    _add_check(doc, "plus: fixed point", conj_fourier(f).sup_distance(f), 1e-9)
    try:
        lam_m, g, q_m = gaussian_fixed_point_witness(d, "minus")
    except ContractViolation as exc:
        doc["extras"]["minus branch"] = f"not available ({exc})"
        return
    doc["extras"]["minus branch lam"] = _fmt_c(lam_m)
    _add_check(doc, "minus: criticality",
               group_core.criticality_residual(g, lam_m), 1e-9)
    target = g if q_m is None else reindex(g, q_m)
    name = "minus: fixed point" if q_m is None else f"minus: reindexed (q={q_m})"
    _add_check(doc, name, conj_fourier(g).sup_distance(target), 1e-9)


def _verify_dirichlet_cmd(d: int, doc: dict) -> None:
    chars = characters.admissible_characters(d)
    doc["extras"]["characters with primitive square"] = len(chars)
    _add_flag(doc, "admissible characters exist", bool(chars))
    values = characters.lambda_chi_values(d)
    doc["extras"]["distinct values"] = ", ".join(
        f"{_fmt_c(v)} (x{c})" for v, c in values
    )
    for chi in chars:
        lam = characters.lambda_chi(chi)
        f = chi.as_group_function()
        _add_check(doc, f"criticality at {_fmt_c(lam)}",
                   group_core.criticality_residual(f, lam), 1e-9)
        alpha = characters.gauss_sum(chi.conjugate()) / math.sqrt(d)
        w = fixed_point_rescale(f, alpha)
        _add_check(doc, f"fixed point at {_fmt_c(lam)}",
                   conj_fourier(w).sup_distance(w), 1e-9)


def _verify_theta_cmd(d: int, a: float, b: float, doc: dict) -> None:
    p = theta.make_params(d, a, b)
    doc["extras"]["lam0"] = _fmt_c(p.lam0)
    doc["extras"]["tau0"] = _fmt_c(p.tau0)
    doc["extras"]["integral pair"] = p.integral
    tol = theta.default_tolerance(d)
    f = theta.theta_critical_function(p, 0.0)
    f = f * (1.0 / f.sup_norm())
    _add_check(doc, "criticality at r=0",
               group_core.relative_criticality_residual(f, p.lam0), tol)
    _add_check(doc, "transform eigen relation",
               theta.eigen_residual_at_real(p, 0.0), tol)
    w = fixed_point_rescale(f, theta.eigen_factor_at_real(p, 0.0))
    _add_check(doc, "fixed point after rescale",
               conj_fourier(w).sup_distance(w), tol)
    _add_flag(doc, "witness symmetric",
              group_core.symmetry_class(w, tol=1e-8) == "symmetric")


def cmd_verify(args, doc: dict) -> int:
    d = arith.require_odd_modulus(args.d)
    if args.construction == "gaussian":
        _verify_gaussian_cmd(d, doc)
    elif args.construction == "dirichlet":
        _verify_dirichlet_cmd(d, doc)
    else:
        if args.a is None or args.b is None:
            raise DomainError("--construction theta requires --a and --b")
        _verify_theta_cmd(d, args.a, args.b, doc)
    return 0 if doc["pass"] else 1


# ------------------------------------------------------------ table

def _lam_label(rec) -> str:
    if isinstance(rec.lam, catalog.AlgebraicSpec):
        fam = rec.params.get("family", rec.lam.kind)
        return f"family:{fam}"
    return catalog.format_lambda(rec.lam)


def _table_rows_for_d(d: int) -> list[dict]:
    rows = []
    for rec in catalog.records_for(d):
        rows.append({
            "d": rec.modulus,
            "lambda": _lam_label(rec),
            "classes": "|".join(sorted(rec.classes)) if rec.classes else "none",
            "construction": rec.construction,
            "negative_fixture": rec.negative_fixture,
            "possibly_incomplete": rec.possibly_incomplete,
        })
    return rows


def cmd_table(args, doc: dict) -> int:
    chosen: list = []
    if args.family:
        fam = {
            "c10": solver.FAMILY_C10, "b3a": solver.FAMILY_B3A,
            "b3b": solver.FAMILY_B3B, "b10": solver.FAMILY_B10,
        }.get(args.family)
        if fam is None:
            raise DomainError(f"unknown family {args.family!r}")
        lams = solver.lambda_values(fam)
        rows = []
        target = math.sqrt(fam.modulus if fam.kind == "quartic" else fam.norm)
        n_target = 0
        for lam in sorted(lams, key=lambda z: (round(z.real, 9), round(z.imag, 9))):
            on = bool(abs(abs(lam) - target) <= 1e-7)
            n_target += int(on)
            rows.append({
                "lambda": _complex_json(complex(lam)),
                "modulus": float(abs(lam)),
                "critical_modulus": on,
            })
        doc["extras"]["family"] = args.family
        doc["extras"]["values"] = len(rows)
        doc["extras"][f"values with modulus sqrt{fam.norm or fam.modulus}"] = n_target
        doc["table"] = rows
        wc = solver.weil_check(fam, fam.norm or fam.modulus)
        doc["extras"]["weil pattern"] = wc["is_weil"]
        return 0
    if args.range:
        try:
            lo, hi = (int(x) for x in args.range.split(".."))
        except ValueError:
            raise DomainError(f"--range wants A..B, got {args.range!r}") from None
        ds = [d for d in range(lo, hi + 1, 1) if d % 2 == 1]
        if not ds or lo % 2 == 0:
            raise DomainError("range must start at an odd modulus >= 3")
        rows = []
        for d in ds:
            recs = catalog.records_for(d)
            values = sum(len(catalog.record_lambdas(r)) for r in recs
                         if not r.negative_fixture)
            rows.append({
                "d": d,
                "records": len(recs),
                "distinct_values": values,
                "fixed_point_tagged": sum(
                    1 for r in recs if "fixed_point" in r.classes),
                "negative_fixtures": sum(1 for r in recs if r.negative_fixture),
                "possibly_incomplete": any(r.possibly_incomplete for r in recs),
            })
        doc["table"] = rows
        return 0
    if args.d is None:
        if not args.csv:
            raise DomainError("table needs --d, --range, --family, or --csv")
        recs = catalog.load_catalog()
    else:
        d = arith.require_odd_modulus(args.d)
        recs = catalog.records_for(d)
        doc["table"] = _table_rows_for_d(d)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(catalog.to_csv(recs))
        doc["extras"]["csv"] = args.csv
    if args.reproduce and args.d is not None:
        budget = catalog.VerificationBudget(starts=args.starts or 300,
                                            seed=args.seed or 0)
        ok_all = True
        for row, rec in zip(doc["table"], recs):
            rep = catalog.verify_record(rec, budget)
            row["status"] = rep["status"]
            bad = rep["status"] == "failed" or (
                rep["status"] == "inconclusive" and not rec.negative_fixture
            )
            ok_all = ok_all and not bad
        _add_flag(doc, "all rows reproduced", ok_all)
        return 0 if ok_all else 1
    return 0


# ------------------------------------------------------------ search

def _parse_lambda_arg(text: str) -> complex:
    try:
        return complex(catalog.eval_exact(catalog.parse_lambda(text)))
    except ContractViolation:
        pass
    try:
        return complex(text.replace("i", "j"))
    except ValueError:
        raise DomainError(
            f"cannot parse {text!r}: use the exact grammar "
            "(integers, i, sqrtN, +, -, *, parentheses) or a decimal like 1+2j"
        ) from None


def cmd_search(args, doc: dict) -> int:
    if args.family_probe:
        rep = solver.family_fixed_point_probe(
            seed=args.seed if args.seed is not None else 1,
            starts=args.starts or 400,
        )
        doc["extras"]["flagged lam"] = _fmt_c(rep["flagged_lambda"])
        doc["extras"]["witness count"] = rep["witness_count"]
        doc["extras"]["possibly incomplete"] = rep["possibly_incomplete"]
        doc["extras"]["notes"] = "; ".join(rep["notes"])
        _add_flag(doc, "4 real roots in range", rep["real_roots_in_range"] == 4)
        _add_flag(doc, "8 values of modulus sqrt17",
                  rep["values_with_modulus_sqrt_d"] == 8)
        _add_flag(doc, "not a Weil family", not rep["is_weil_family"])
        _add_flag(doc, f"{rep['expected_witness_count']} distinct witnesses",
                  rep["witness_count"] == rep["expected_witness_count"])
        _add_flag(doc, "fixed point after rescale", rep["fixed_point_found"])
        if rep["fixed_point_alpha"] is not None:
            doc["extras"]["alpha"] = _fmt_c(rep["fixed_point_alpha"])
        return 0 if doc["pass"] else 1
    if args.lam is None:
        raise DomainError("search needs --lambda (or --family-probe)")
    d = arith.require_odd_modulus(args.d)
    lam = _parse_lambda_arg(args.lam)
    doc["extras"]["lambda"] = _fmt_c(lam)
    seed = args.seed if args.seed is not None else 0
    if args.probe == "fixed_point":
        rep = solver.probe_fixed_point(d, lam, starts=args.starts or 600, seed=seed)
    elif args.probe == "reindexed":
        rep = solver.probe_reindexed_fixed_point(
            d, lam, starts=args.starts or 600, seed=seed
        )
    else:
        cfg = solver.SearchConfig(
            modulus=d, lam=lam, symmetry=args.symmetry,
            normalization=args.normalization,
            fixed_point="none", q=None,
            starts=args.starts or 2000, seed=seed,
        )
        res = solver.find_critical_functions(cfg)
        doc["extras"]["starts"] = cfg.starts
        doc["extras"]["converged"] = res.converged
        doc["witnesses"] = _witnesses_json(res.witnesses)
        doc["extras"]["distinct witnesses"] = len(res.witnesses)
        for i, r in enumerate(res.criticality_residuals):
            _add_check(doc, f"witness {i}: criticality", r, 1e-9)
        _add_flag(doc, "witnesses found", res.found)
        return 0 if doc["pass"] and res.found else 1
    if rep["found"]:
        doc["witnesses"] = _witnesses_json([rep["witness"]])
        if rep.get("q") is not None:
            doc["extras"]["q"] = rep["q"]
        _add_check(doc, "criticality", rep["residuals"]["criticality"], 1e-9)
        _add_check(doc, "constraint", rep["residuals"]["constraints"], 1e-9)
        return 0 if doc["pass"] else 1
    doc["extras"]["reason"] = rep["reason"]
    doc["extras"]["conclusive"] = rep["conclusive"]
    _add_flag(doc, "witness found", False)
    return 1


# ------------------------------------------------------------ entry point

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="convsquare",
        description="critical functions of the convolution-square equation "
        "on Z/dZ",
    )
    ap.add_argument("--format", choices=("human", "json"), default="human")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="reproduce a named construction")
    v.add_argument("--d", type=int, required=True)
    v.add_argument("--construction", required=True,
                   choices=("gaussian", "dirichlet", "theta"))
    v.add_argument("--a", type=float)
    v.add_argument("--b", type=float)

    t = sub.add_parser("table", help="print catalog records")
    t.add_argument("--d", type=int)
    t.add_argument("--range", help="moduli range A..B (odd values)")
    t.add_argument("--family", help="algebraic family: c10, b3a, b3b, b10")
    t.add_argument("--reproduce", action="store_true",
                   help="re-derive each printed row")
    t.add_argument("--csv", help="write a CSV export to this path")
    t.add_argument("--starts", type=int)
    t.add_argument("--seed", type=int)

    s = sub.add_parser("search", help="multistart witness search")
    s.add_argument("--d", type=int)
    s.add_argument("--lambda", dest="lam",
                   help="exact grammar (e.g. -sqrt5 or 1+2*i) or decimal 1+2j")
    s.add_argument("--symmetry", choices=("none", "symmetric", "antisymmetric"),
                   default="none")
    s.add_argument("--normalization", choices=("f1", "unit"), default="f1")
    s.add_argument("--q", type=int)
    s.add_argument("--seed", type=int)
    s.add_argument("--starts", type=int)
    s.add_argument("--probe", choices=("fixed_point", "reindexed"))
    s.add_argument("--family-probe", action="store_true",
                   help="run the full degree-10 family probe at d=17")
    return ap


def _fuse_lambda(argv: list[str]) -> list[str]:
    # "--lambda -sqrt5" would be read as a missing argument; fuse the pair
    out = []
    i = 0
    while i < len(argv):
        if argv[i] == "--lambda" and i + 1 < len(argv):
            out.append(f"--lambda={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    ap = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = ap.parse_args(_fuse_lambda(list(argv)))
    if vars(args).get("seed", 0) is None:
        env = os.environ.get("CONVSQUARE_SEED")
        if env is not None:
            try:
                args.seed = int(env)
            except ValueError:
                print(f"CONVSQUARE_SEED must be an integer, got {env!r}",
                      file=sys.stderr)
                return 2
    inputs = {k: v for k, v in vars(args).items() if k != "format"}
    doc = _new_doc(args.command, inputs)
    t0 = time.time()
    try:
        if args.command == "verify":
            code = cmd_verify(args, doc)
        elif args.command == "table":
            code = cmd_table(args, doc)
        else:
            code = cmd_search(args, doc)
    except (DomainError, ContractViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    doc["timing_seconds"] = round(time.time() - t0, 3)
    _emit(doc, args.format, sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
