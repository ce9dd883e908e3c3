"""Catalog of known critical values on Z/dZ for odd d <= 17.

Each record stores the modulus, the critical value lam either as an exact
symbolic token tree (integers, i, square roots) or as an AlgebraicSpec
family, the symmetry classes the value is known to admit, and a
construction tag linking it to a reproduction procedure:

  explicit    delta / all-ones / embeddings and pullbacks between moduli
  gaussian    the eta^{-u(k-v)^2} family
  dirichlet   primitive characters with primitive square
  theta       theta-function samples for an admissible (a, b)
  product     tensor product of witnesses over coprime factor moduli
  solver      numerical multistart search (witness-found, never proof)
  polynomial  an algebraic family given by its defining polynomial

Classes (downward closed, see group_core):

  fixed_point           some witness satisfies conj_fourier(f) = f
  reindexed_fixed_point some witness satisfies conj_fourier(f) = reindex(f, q)
  critical              a nonzero witness exists at all

A record with fixed_point also carries the two weaker tags.  Records with
negative_fixture=True store values known NOT to be critical; their class
set is empty and probes finding nothing is the expected (consistent)
outcome.  possibly_incomplete mirrors source hedges for d in {13, 15, 17}:
the value lists for those moduli are not claimed exhaustive.
"""
from __future__ import annotations

import cmath
import io
import json
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import arith, characters, group_core, solver, theta
from .errors import ContractViolation
from .gaussians import gaussian_fixed_point_witness
from .group_core import GroupFunction, conj_fourier, fixed_point_rescale, reindex
from .solver import (
    FAMILY_B10,
    FAMILY_B3A,
    FAMILY_B3B,
    FAMILY_C10,
    AlgebraicSpec,
    SearchConfig,
    find_critical_functions,
    lambda_values,
    poly_roots,
)

__all__ = [
    "CriticalValueRecord",
    "VerificationBudget",
    "eval_exact",
    "parse_lambda",
    "format_lambda",
    "load_catalog",
    "records_for",
    "record_lambdas",
    "verify_record",
    "theta_family_sweep",
    "to_json",
    "from_json",
    "to_csv",
    "CLASS_NAMES",
]

CLASS_NAMES = ("critical", "reindexed_fixed_point", "fixed_point")

SCHEMA = "convsquare-catalog/1"


# ------------------------------------------------------------ token trees
#
# Exact values are nested lists: ["int", n] | ["i"] | ["sqrt", expr]
# | ["neg", expr] | ["add", e1, e2] | ["mul", e1, e2].

_TOKEN_ARITY = {"int": 1, "i": 0, "sqrt": 1, "neg": 1, "add": 2, "mul": 2}


def eval_exact(tokens) -> complex:
    """Evaluate a token tree to a binary64 complex number."""
    if not isinstance(tokens, (list, tuple)) or not tokens:
        raise ContractViolation(f"not a token tree: {tokens!r}")
    op = tokens[0]
    arity = _TOKEN_ARITY.get(op)
    if arity is None:
        raise ContractViolation(f"unknown token {op!r}")
    if len(tokens) != arity + 1:
        raise ContractViolation(f"token {op!r} wants {arity} arguments, got {len(tokens) - 1}")
    if op == "int":
        return complex(tokens[1])
    if op == "i":
        return 1j
    if op == "sqrt":
        return cmath.sqrt(eval_exact(tokens[1]))
    if op == "neg":
        return -eval_exact(tokens[1])
    if op == "add":
        return eval_exact(tokens[1]) + eval_exact(tokens[2])
    return eval_exact(tokens[1]) * eval_exact(tokens[2])


def _tokenize(s: str) -> list:
    out = []
    i = 0
    while i < len(s):
        c = s[i]
        if c.isspace():
            i += 1
        elif c.isdigit():
            j = i
            while j < len(s) and s[j].isdigit():
                j += 1
            out.append(("num", int(s[i:j])))
            i = j
        elif c.isalpha():
            j = i
            while j < len(s) and s[j].isalpha():
                j += 1
            word = s[i:j]
            if word == "sqrt":
                out.append(("sqrt", None))
            elif word == "i":
                out.append(("i", None))
            else:
                raise ContractViolation(f"unknown word {word!r} in {s!r}")
            i = j
        elif c in "+-*()":
            out.append((c, None))
            i += 1
        else:
            raise ContractViolation(f"bad character {c!r} in {s!r}")
    return out


class _Parser:
    """expr := term (('+'|'-') term)*; term := factor ('*'? factor)*;
    factor := '-' factor | atom; atom := INT | i | sqrt INT
    | sqrt '(' expr ')' | '(' expr ')'."""

    def __init__(self, tokens):
        self.toks = tokens
        self.pos = 0

    def peek(self):
        return self.toks[self.pos][0] if self.pos < len(self.toks) else None

    def take(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expr(self):
        node = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            node = ["add", node, ["neg", rhs] if op == "-" else rhs]
        return node

    def term(self):
        node = self.factor()
        while True:
            nxt = self.peek()
            if nxt == "*":
                self.take()
                node = ["mul", node, self.factor()]
            elif nxt in ("num", "i", "sqrt", "("):
                node = ["mul", node, self.factor()]
            else:
                return node

    def factor(self):
        if self.peek() == "-":
            self.take()
            return ["neg", self.factor()]
        return self.atom()

    def atom(self):
        kind, val = self.take() if self.pos < len(self.toks) else (None, None)
        if kind == "num":
            return ["int", val]
        if kind == "i":
            return ["i"]
        if kind == "sqrt":
            if self.peek() == "num":
                return ["sqrt", ["int", self.take()[1]]]
            if self.peek() == "(":
                self.take()
                inner = self.expr()
                if self.peek() != ")":
                    raise ContractViolation("missing ) after sqrt(")
                self.take()
                return ["sqrt", inner]
            raise ContractViolation("sqrt needs an integer or a parenthesized term")
        if kind == "(":
            inner = self.expr()
            if self.peek() != ")":
                raise ContractViolation("missing )")
            self.take()
            return inner
        raise ContractViolation(f"unexpected token {kind!r}")


def parse_lambda(s: str):
    """Parse an exact value: integers, i, sqrtN, sqrt(expr), +, -, *, parens."""
    p = _Parser(_tokenize(s))
    node = p.expr()
    if p.pos != len(p.toks):
        raise ContractViolation(f"trailing input in {s!r}")
    return node


def format_lambda(tokens) -> str:
    """Render a token tree in the input grammar."""
    op = tokens[0]
    if op == "int":
        return str(tokens[1])
    if op == "i":
        return "i"
    if op == "sqrt":
        inner = tokens[1]
        if inner[0] == "int" and inner[1] >= 0:
            return f"sqrt{inner[1]}"
        return f"sqrt({format_lambda(inner)})"
    if op == "neg":
        inner = format_lambda(tokens[1])
        if tokens[1][0] in ("add", "neg"):
            return f"-({inner})"
        return f"-{inner}"
    if op == "add":
        left = format_lambda(tokens[1])
        right = format_lambda(tokens[2])
        if right.startswith("-"):
            return f"{left}{right}"
        return f"{left}+{right}"
    if op == "mul":
        if tokens[1][0] == "neg":
            return "-" + format_lambda(["mul", tokens[1][1], tokens[2]])
        parts = []
        for sub in (tokens[1], tokens[2]):
            rendered = format_lambda(sub)
            if sub[0] in ("add", "neg"):
                rendered = f"({rendered})"
            parts.append(rendered)
        return "*".join(parts)
    raise ContractViolation(f"unknown token {op!r}")


# ------------------------------------------------------------ records

@dataclass(frozen=True)
class CriticalValueRecord:
    modulus: int
    lam: object  # token tree (nested lists) or AlgebraicSpec
    classes: frozenset
    construction: str
    params: dict = field(default_factory=dict)
    origin: str = ""
    epsilon: int | None = None
    possibly_incomplete: bool = False
    negative_fixture: bool = False
    notes: str = ""

    def __post_init__(self) -> None:
        arith.require_odd_modulus(self.modulus)
        if self.construction not in (
            "explicit", "gaussian", "dirichlet", "theta",
            "product", "solver", "polynomial",
        ):
            raise ContractViolation(f"unknown construction {self.construction!r}")
        cl = frozenset(self.classes)
        if not cl <= set(CLASS_NAMES):
            raise ContractViolation(f"unknown class in {sorted(cl)}")
        # downward closure: a fixed point is a q=1 reindexed fixed point,
        # and any fixed point is in particular critical
        if "fixed_point" in cl and "reindexed_fixed_point" not in cl:
            raise ContractViolation("fixed_point requires reindexed_fixed_point")
        if "reindexed_fixed_point" in cl and "critical" not in cl:
            raise ContractViolation("reindexed_fixed_point requires critical")
        if self.negative_fixture and cl:
            raise ContractViolation("negative fixtures carry no classes")
        if not self.negative_fixture and not cl and not isinstance(
            self.lam, AlgebraicSpec
        ):
            raise ContractViolation("a positive record needs at least 'critical'")
        object.__setattr__(self, "classes", cl)
        if self.epsilon not in (None, 1, -1):
            raise ContractViolation(f"epsilon must be +-1, got {self.epsilon}")


def record_lambdas(rec: CriticalValueRecord) -> list[complex]:
    """Every complex value the record describes (families expand)."""
    if isinstance(rec.lam, AlgebraicSpec):
        return [complex(v) for v in lambda_values(rec.lam)]
    return [eval_exact(rec.lam)]


# ------------------------------------------------------------ catalog data

def _R(
    d: int,
    lam,
    classes: str,
    construction: str,
    params: dict | None = None,
    origin: str | None = None,
    epsilon: int | None = None,
    negative: bool = False,
    notes: str = "",
) -> CriticalValueRecord:
    """classes shorthand: '' none, 'c' critical, 'cr' +reindexed, 'crf' all."""
    cl = {
        "": frozenset(),
        "c": frozenset({"critical"}),
        "cr": frozenset({"critical", "reindexed_fixed_point"}),
        "crf": frozenset(CLASS_NAMES),
    }[classes]
    if isinstance(lam, str):
        lam = parse_lambda(lam)
    return CriticalValueRecord(
        modulus=d,
        lam=lam,
        classes=cl,
        construction=construction,
        params=params or {},
        origin=origin if origin is not None else f"value table d={d}",
        epsilon=epsilon,
        possibly_incomplete=d in (13, 15, 17),
        negative_fixture=negative,
        notes=notes,
    )


def _gauss_branch(d: int, branch: str) -> dict:
    return {"branch": branch}


def _records_d3() -> list[CriticalValueRecord]:
    return [
        _R(3, "1", "c", "explicit", {"kind": "delta"}),
        _R(3, "3", "c", "explicit", {"kind": "ones"}),
        _R(3, "i*sqrt3", "crf", "gaussian", _gauss_branch(3, "plus")),
        _R(3, "-i*sqrt3", "crf", "gaussian", _gauss_branch(3, "minus")),
    ]


def _records_d5() -> list[CriticalValueRecord]:
    return [
        _R(5, "1", "c", "explicit", {"kind": "delta"}),
        _R(5, "5", "c", "explicit", {"kind": "ones"}),
        _R(5, "sqrt5", "crf", "gaussian", _gauss_branch(5, "plus")),
        _R(5, "-sqrt5", "cr", "gaussian", _gauss_branch(5, "minus"),
           notes="reindexed witness with q=2; no plain fixed point exists"),
        _R(5, "1+2*i", "crf", "dirichlet"),
        _R(5, "1-2*i", "crf", "dirichlet"),
        _R(5, "-1+2*i", "", "solver", {"mode": "search"},
           origin="non-critical examples", negative=True),
        _R(5, "-1-2*i", "", "solver", {"mode": "search"},
           origin="non-critical examples", negative=True),
    ]


def _records_d7() -> list[CriticalValueRecord]:
    return [
        _R(7, "1", "c", "explicit", {"kind": "delta"}),
        _R(7, "7", "c", "explicit", {"kind": "ones"}),
        _R(7, "i*sqrt7", "crf", "gaussian", _gauss_branch(7, "plus")),
        _R(7, "-i*sqrt7", "crf", "gaussian", _gauss_branch(7, "minus")),
        _R(7, "2+i*sqrt3", "crf", "dirichlet"),
        _R(7, "2-i*sqrt3", "crf", "dirichlet"),
        _R(7, "-2+i*sqrt3", "crf", "dirichlet"),
        _R(7, "-2-i*sqrt3", "crf", "dirichlet"),
    ]


def _records_d9() -> list[CriticalValueRecord]:
    note_xref = (
        "symmetric-witness comment attached by modulus cross-reference "
        "(the source states the value without naming its modulus)"
    )
    return [
        _R(9, "1", "c", "explicit", {"kind": "delta"}),
        _R(9, "9", "c", "explicit", {"kind": "ones"}),
        _R(9, "i*sqrt3", "c", "explicit",
           {"kind": "embed", "inner": {"kind": "gaussian", "d": 3, "branch": "plus"}},
           notes="supported on 3Z/9Z; inherits the modulus-3 critical value"),
        _R(9, "-i*sqrt3", "c", "explicit",
           {"kind": "embed", "inner": {"kind": "gaussian", "d": 3, "branch": "minus"}}),
        _R(9, "3*i*sqrt3", "c", "explicit",
           {"kind": "lift", "inner": {"kind": "gaussian", "d": 3, "branch": "plus"}},
           notes="pullback along Z/9Z -> Z/3Z multiplies the value by 3"),
        _R(9, "-3*i*sqrt3", "c", "explicit",
           {"kind": "lift", "inner": {"kind": "gaussian", "d": 3, "branch": "minus"}}),
        _R(9, "3", "crf", "dirichlet", {"expected_count": 4}),
        _R(9, "sqrt5+2*i", "crf", "theta", {"a": 5, "b": 4}),
        _R(9, "sqrt5-2*i", "crf", "theta", {"a": 5, "b": 4, "conj": True}),
        _R(9, "-sqrt5+2*i", "crf", "solver", {"mode": "fixed_point"}, notes=note_xref),
        _R(9, "-sqrt5-2*i", "crf", "solver", {"mode": "fixed_point"}, notes=note_xref),
        _R(9, "1+2*i*sqrt2", "crf", "theta", {"a": 1, "b": 8}),
        _R(9, "1-2*i*sqrt2", "crf", "theta", {"a": 1, "b": 8, "conj": True}),
        _R(9, "-1+2*i*sqrt2", "crf", "solver", {"mode": "fixed_point"}, notes=note_xref),
        _R(9, "-1-2*i*sqrt2", "crf", "solver", {"mode": "fixed_point"}, notes=note_xref),
        _R(9, "-3", "", "solver", {"mode": "search"},
           origin="non-critical examples", negative=True),
    ]


def _records_d11() -> list[CriticalValueRecord]:
    recs = [
        _R(11, "1", "c", "explicit", {"kind": "delta"}),
        _R(11, "11", "c", "explicit", {"kind": "ones"}),
        _R(11, "4+sqrt5", "c", "solver", {"mode": "search", "symmetry": "symmetric"}),
        _R(11, "4-sqrt5", "c", "solver", {"mode": "search", "symmetry": "symmetric"}),
        _R(11, "i*sqrt11", "crf", "gaussian", _gauss_branch(11, "plus")),
        _R(11, "-i*sqrt11", "crf", "gaussian", _gauss_branch(11, "minus")),
        _R(11, "2+i*sqrt7", "crf", "theta", {"a": 4, "b": 7}),
        _R(11, "2-i*sqrt7", "crf", "theta", {"a": 4, "b": 7, "conj": True}),
        _R(11, "2*sqrt2+i*sqrt3", "crf", "theta", {"a": 8, "b": 3}),
        _R(11, "2*sqrt2-i*sqrt3", "crf", "theta", {"a": 8, "b": 3, "conj": True}),
        _R(11, "-2*sqrt2+i*sqrt3", "crf", "solver", {"mode": "fixed_point"},
           notes="symmetric-witness comment attached by modulus cross-reference"),
        _R(11, "-2*sqrt2-i*sqrt3", "crf", "solver", {"mode": "fixed_point"},
           notes="symmetric-witness comment attached by modulus cross-reference"),
        _R(11, "-2+i*sqrt7", "", "solver", {"mode": "search"},
           origin="non-critical examples", negative=True),
        _R(11, "-2-i*sqrt7", "", "solver", {"mode": "search"},
           origin="non-critical examples", negative=True),
    ]
    for s_out in (1, -1):
        for eps in (1, -1):
            for s_in in (1, -1):
                base = "1+sqrt5" if eps == 1 else "1-sqrt5"
                inner = "5-2*sqrt5" if eps == 1 else "5+2*sqrt5"
                head = f"({base})" if s_out == 1 else f"-({base})"
                tail = f"+i*sqrt({inner})" if s_in == 1 else f"-i*sqrt({inner})"
                recs.append(
                    _R(11, head + tail, "crf", "dirichlet", epsilon=eps,
                       origin="character table d=11")
                )
    return recs


def _records_d13() -> list[CriticalValueRecord]:
    q2_note = "reindexed witness with q=2; no plain fixed-point witness is recorded"
    return [
        _R(13, "1", "c", "explicit", {"kind": "delta"}),
        _R(13, "13", "c", "explicit", {"kind": "ones"}),
        _R(13, "5+2*sqrt3", "c", "solver", {"mode": "search", "symmetry": "symmetric"}),
        _R(13, "5-2*sqrt3", "c", "solver", {"mode": "search", "symmetry": "symmetric"}),
        _R(13, "sqrt13", "crf", "gaussian", _gauss_branch(13, "plus")),
        _R(13, "-sqrt13", "cr", "gaussian", _gauss_branch(13, "minus"),
           notes="reindexed witness only; the value is outside the fixed-point class"),
        _R(13, "3+2*i", "crf", "dirichlet", {"expected_count": 2}),
        _R(13, "3-2*i", "crf", "dirichlet", {"expected_count": 2}),
        _R(13, "-3+2*i", "crf", "dirichlet", {"expected_count": 1}),
        _R(13, "-3-2*i", "crf", "dirichlet", {"expected_count": 1}),
        _R(13, "sqrt5+2*i*sqrt2", "crf", "theta", {"a": 5, "b": 8}),
        _R(13, "sqrt5-2*i*sqrt2", "crf", "theta", {"a": 5, "b": 8, "conj": True}),
        _R(13, "-sqrt5+2*i*sqrt2", "cr", "solver",
           {"mode": "reindexed", "q": 2}, notes=q2_note),
        _R(13, "-sqrt5-2*i*sqrt2", "cr", "solver",
           {"mode": "reindexed", "q": 2}, notes=q2_note),
        _R(13, "1+2*i*sqrt3", "crf", "theta", {"a": 1, "b": 12}),
        _R(13, "1-2*i*sqrt3", "crf", "theta", {"a": 1, "b": 12, "conj": True}),
        _R(13, "-1+2*i*sqrt3", "crf", "dirichlet", {"expected_count": 2}),
        _R(13, "-1-2*i*sqrt3", "crf", "dirichlet", {"expected_count": 2}),
    ]


_PRODUCT_FACTORS_3 = {
    "1": {"kind": "delta", "d": 3},
    "3": {"kind": "ones", "d": 3},
    "i*sqrt3": {"kind": "gaussian", "d": 3, "branch": "plus"},
    "-i*sqrt3": {"kind": "gaussian", "d": 3, "branch": "minus"},
}

_PRODUCT_FACTORS_5 = {
    "1": {"kind": "delta", "d": 5},
    "5": {"kind": "ones", "d": 5},
    "sqrt5": {"kind": "gaussian", "d": 5, "branch": "plus"},
    "-sqrt5": {"kind": "gaussian", "d": 5, "branch": "minus"},
    "1+2*i": {"kind": "character", "d": 5, "value": parse_lambda("1+2*i")},
    "1-2*i": {"kind": "character", "d": 5, "value": parse_lambda("1-2*i")},
}


def _records_d15() -> list[CriticalValueRecord]:
    recs = [
        _R(15, "1", "c", "explicit", {"kind": "delta"},
           notes="also the product of the two factor delta witnesses"),
        _R(15, "15", "c", "explicit", {"kind": "ones"}),
        _R(15, "i*sqrt15", "crf", "gaussian", _gauss_branch(15, "plus")),
        _R(15, "-i*sqrt15", "crf", "gaussian", _gauss_branch(15, "minus")),
        _R(15, "2*sqrt3+i*sqrt3", "crf", "theta", {"a": 12, "b": 3}),
        _R(15, "2*sqrt3-i*sqrt3", "crf", "theta", {"a": 12, "b": 3, "conj": True}),
    ]
    # tensor products of factor witnesses over Z/3Z x Z/5Z; values already
    # represented above (or as the explicit 1 and 15) are skipped
    skip = {
        _value_key(eval_exact(parse_lambda(s)))
        for s in ("1", "15", "i*sqrt15", "-i*sqrt15",
                  "2*sqrt3+i*sqrt3", "2*sqrt3-i*sqrt3")
    }
    seen = set(skip)
    for s3, f3 in _PRODUCT_FACTORS_3.items():
        for s5, f5 in _PRODUCT_FACTORS_5.items():
            tok = ["mul", parse_lambda(s3), parse_lambda(s5)]
            key = _value_key(eval_exact(tok))
            if key in seen:
                continue
            seen.add(key)
            recs.append(
                _R(15, tok, "c", "product", {"left": f3, "right": f5},
                   origin="product values d=15")
            )
    sym = {"mode": "search", "symmetry": "symmetric"}
    unit_sym = {"mode": "search", "symmetry": "symmetric", "normalization": "unit"}
    recs += [
        _R(15, "6+sqrt21", "c", "solver", dict(sym)),
        _R(15, "6-sqrt21", "c", "solver", dict(sym)),
        _R(15, "-3", "c", "solver", dict(unit_sym),
           notes="critical here; contrast with the modulus-9 negative fixture"),
        _R(15, "-5", "c", "solver", dict(unit_sym)),
    ]
    # +-(sqrt3 +- i sqrt2)(sqrt2 +- i): all eight sign combinations
    for s_out in (1, -1):
        for s_mid in (1, -1):
            for s_in in (1, -1):
                left = f"(sqrt3{'+' if s_mid == 1 else '-'}i*sqrt2)"
                right = f"(sqrt2{'+' if s_in == 1 else '-'}i)"
                expr = f"{left}*{right}" if s_out == 1 else f"-{left}*{right}"
                recs.append(_R(15, expr, "c", "solver", dict(sym),
                               origin="factored values d=15"))
    for eps in (1, -1):
        head = "1+sqrt5" if eps == 1 else "1-sqrt5"
        inner = "9-2*sqrt5" if eps == 1 else "9+2*sqrt5"
        for s_in in (1, -1):
            tail = f"+i*sqrt({inner})" if s_in == 1 else f"-i*sqrt({inner})"
            recs.append(_R(15, f"({head}){tail}", "c", "solver", dict(sym),
                           epsilon=eps))
    for eps in (1, -1):
        outer = "10+2*sqrt5" if eps == 1 else "10-2*sqrt5"
        inner = "5-2*sqrt5" if eps == 1 else "5+2*sqrt5"
        for s_out in (1, -1):
            for s_in in (1, -1):
                head = f"sqrt({outer})" if s_out == 1 else f"-sqrt({outer})"
                tail = f"+i*sqrt({inner})" if s_in == 1 else f"-i*sqrt({inner})"
                recs.append(_R(15, head + tail, "c", "solver", dict(sym),
                               epsilon=eps))
    for name, fam in (("b3a", FAMILY_B3A), ("b3b", FAMILY_B3B), ("b10", FAMILY_B10)):
        recs.append(
            CriticalValueRecord(
                modulus=15,
                lam=fam,
                classes=frozenset({"critical"}),
                construction="polynomial",
                params={"family": name},
                origin="family table d=15",
                possibly_incomplete=True,
                notes="lam solves x^2 - 4bx + 15 over the roots b of the "
                "stored polynomial",
            )
        )
    return recs


def _records_d17() -> list[CriticalValueRecord]:
    anti = {"mode": "search", "symmetry": "antisymmetric"}
    recs = [
        _R(17, "1", "c", "explicit", {"kind": "delta"}),
        _R(17, "17", "c", "explicit", {"kind": "ones"}),
        _R(17, "7+4*sqrt2", "c", "solver", {"mode": "search"},
           notes="plain multistart witnesses; no antisymmetric witness surfaced"),
        _R(17, "7-4*sqrt2", "c", "solver", {"mode": "search"},
           notes="plain multistart witnesses; no antisymmetric witness surfaced"),
        _R(17, "sqrt17", "crf", "gaussian", _gauss_branch(17, "plus")),
        _R(17, "-sqrt17", "cr", "gaussian", _gauss_branch(17, "minus"),
           notes="reindexed witness only; the value is outside the fixed-point class"),
        _R(17, "sqrt13+2*i", "crf", "theta", {"a": 13, "b": 4}),
        _R(17, "sqrt13-2*i", "crf", "theta", {"a": 13, "b": 4, "conj": True}),
        _R(17, "-sqrt13+2*i", "c", "solver", dict(anti)),
        _R(17, "-sqrt13-2*i", "c", "solver", dict(anti)),
        _R(17, "3+2*i*sqrt2", "crf", "dirichlet", {"expected_count": 2}),
        _R(17, "3-2*i*sqrt2", "crf", "dirichlet", {"expected_count": 2}),
        _R(17, "sqrt5+2*i*sqrt3", "crf", "theta", {"a": 5, "b": 12}),
        _R(17, "sqrt5-2*i*sqrt3", "crf", "theta", {"a": 5, "b": 12, "conj": True}),
        _R(17, "-sqrt5+2*i*sqrt3", "c", "solver", dict(anti)),
        _R(17, "-sqrt5-2*i*sqrt3", "c", "solver", dict(anti)),
        _R(17, "1+4*i", "crf", "theta", {"a": 1, "b": 16}),
        _R(17, "1-4*i", "crf", "theta", {"a": 1, "b": 16, "conj": True}),
        _R(17, "-1+4*i", "crf", "dirichlet", {"expected_count": 1}),
        _R(17, "-1-4*i", "crf", "dirichlet", {"expected_count": 1}),
    ]
    eps_note = (
        "equals -(1+2e'sqrt2)+-2i sqrt(2-e'sqrt2) with e' = -epsilon; "
        "the character and factored renderings coincide"
    )
    for eps in (1, -1):
        head = "1+2*sqrt2" if eps == 1 else "1-2*sqrt2"
        inner = "2-sqrt2" if eps == 1 else "2+sqrt2"
        for s_in in (1, -1):
            tail = f"+2*i*sqrt({inner})" if s_in == 1 else f"-2*i*sqrt({inner})"
            recs.append(_R(17, f"({head}){tail}", "c", "solver", dict(anti),
                           epsilon=eps, origin="factored values d=17"))
            recs.append(_R(17, f"-({head}){tail}", "crf", "dirichlet",
                           {"expected_count": 2},
                           epsilon=eps, origin="character table d=17",
                           notes=eps_note))
    recs.append(
        CriticalValueRecord(
            modulus=17,
            lam=FAMILY_C10,
            classes=frozenset({"critical"}),
            construction="polynomial",
            params={"family": "c10"},
            origin="family table d=17",
            possibly_incomplete=True,
            notes="20 values; exactly 8 have modulus sqrt17, and the one "
            "near 3.942+1.209i admits a conjugate-Fourier fixed point",
        )
    )
    return recs


def _value_key(z: complex) -> tuple:
    return (round(z.real, 9), round(z.imag, 9))


@lru_cache(maxsize=1)
def _catalog() -> tuple:
    recs = (
        _records_d3() + _records_d5() + _records_d7() + _records_d9()
        + _records_d11() + _records_d13() + _records_d15() + _records_d17()
    )
    return tuple(recs)


def load_catalog() -> list[CriticalValueRecord]:
    """The full built-in catalog for odd moduli 3..17."""
    return list(_catalog())


def records_for(d: int) -> list[CriticalValueRecord]:
    arith.require_odd_modulus(d)
    return [r for r in _catalog() if r.modulus == d]


# ------------------------------------------------------------ verification

@dataclass(frozen=True)
class VerificationBudget:
    starts: int = 800
    seed: int = 0
    tol: float = 1e-9
    solver_tol: float = 1e-12


def _check(checks: list, name: str, residual: float, tolerance: float) -> bool:
    ok = bool(residual <= tolerance)
    checks.append(
        {"name": name, "residual": float(residual), "tolerance": float(tolerance),
         "pass": ok}
    )
    return ok


def _factor_witness(recipe: dict) -> tuple[complex, GroupFunction]:
    kind = recipe["kind"]
    e = recipe["d"]
    if kind == "delta":
        return 1.0 + 0j, group_core.delta(e)
    if kind == "ones":
        return complex(e), group_core.ones(e)
    if kind == "gaussian":
        lam, f, _ = gaussian_fixed_point_witness(e, recipe["branch"])
        return complex(lam), f
    if kind == "character":
        target = eval_exact(recipe["value"])
        for chi in characters.admissible_characters(e):
            lv = characters.lambda_chi(chi)
            if abs(lv - target) <= 1e-9:
                return lv, chi.as_group_function()
        raise ContractViolation(f"no character value matches {target} mod {e}")
    raise ContractViolation(f"unknown factor kind {kind!r}")


def _verify_explicit(rec, budget, checks, notes) -> str:
    kind = rec.params["kind"]
    lam = eval_exact(rec.lam)
    d = rec.modulus
    if kind == "delta":
        f = group_core.delta(d)
    elif kind == "ones":
        f = group_core.ones(d)
    elif kind in ("embed", "lift"):
        inner_lam, g = _factor_witness(rec.params["inner"])
        e = g.modulus
        if d % e:
            raise ContractViolation(f"inner modulus {e} does not divide {d}")
        m = d // e
        vals = np.zeros(d, complex)
        if kind == "embed":
            for j in range(e):
                vals[m * j] = g(j)
            expected = inner_lam
        else:
            for k in range(d):
                vals[k] = g(k % e)
            expected = m * inner_lam
        _check(checks, "value identity", abs(lam - expected), 1e-9)
        f = GroupFunction(d, vals)
    else:
        raise ContractViolation(f"unknown explicit kind {kind!r}")
    _check(checks, "criticality", group_core.criticality_residual(f, lam), budget.tol)
    return "verified" if all(c["pass"] for c in checks) else "failed"


def _verify_gaussian(rec, budget, checks, notes) -> str:
    lam = eval_exact(rec.lam)
    wl, f, q = gaussian_fixed_point_witness(rec.modulus, rec.params["branch"])
    _check(checks, "value identity", abs(lam - wl), 1e-9)
    _check(checks, "criticality", group_core.criticality_residual(f, wl), budget.tol)
    g = conj_fourier(f)
    target = f if q is None else reindex(f, q)
    name = "fixed point" if q is None else f"reindexed fixed point (q={q})"
    _check(checks, name, g.sup_distance(target), budget.tol)
    if q is None and "fixed_point" not in rec.classes:
        notes.append("construction gives a plain fixed point beyond the tagged class")
    if q is not None and "fixed_point" in rec.classes:
        return "failed"
    _check(
        checks, "witness symmetric",
        0.0 if group_core.symmetry_class(f) == "symmetric" else 1.0, 0.5,
    )
    return "verified" if all(c["pass"] for c in checks) else "failed"


def _verify_dirichlet(rec, budget, checks, notes) -> str:
    lam = eval_exact(rec.lam)
    d = rec.modulus
    hits = [
        chi for chi in characters.admissible_characters(d)
        if abs(characters.lambda_chi(chi) - lam) <= 1e-9
    ]
    _check(checks, "matching characters exist", 0.0 if hits else 1.0, 0.5)
    expected = rec.params.get("expected_count")
    if expected is not None:
        _check(checks, f"character count = {expected}",
               abs(len(hits) - expected), 0.5)
    if not hits:
        return "failed"
    chi = hits[0]
    f = chi.as_group_function()
    _check(checks, "criticality", group_core.criticality_residual(f, lam), budget.tol)
    # conj_fourier(chi) = (G(conj chi)/sqrt d) chi with a unimodular factor
    alpha = characters.gauss_sum(chi.conjugate()) / math.sqrt(d)
    _check(checks, "transform factor unimodular", abs(abs(alpha) - 1.0), 1e-9)
    w = fixed_point_rescale(f, alpha)
    _check(checks, "fixed point after rescale",
           conj_fourier(w).sup_distance(w), budget.tol)
    return "verified" if all(c["pass"] for c in checks) else "failed"


def _verify_theta(rec, budget, checks, notes) -> str:
    lam = eval_exact(rec.lam)
    d = rec.modulus
    p = theta.make_params(d, rec.params["a"], rec.params["b"])
    conj_flag = bool(rec.params.get("conj"))
    target = p.lam0.conjugate() if conj_flag else p.lam0
    _check(checks, "value identity", abs(lam - target), 1e-9)
    _check(checks, "integral flag", 0.0 if p.integral else 1.0, 0.5)
    tol = max(budget.tol, theta.default_tolerance(d))
    f = theta.theta_critical_function(p, 0.0)
    alpha = theta.eigen_factor_at_real(p, 0.0)
    w = fixed_point_rescale(f * (1.0 / f.sup_norm()), alpha)
    if conj_flag:
        w = w.conj()
    _check(checks, "criticality",
           group_core.relative_criticality_residual(w, target), tol)
    _check(checks, "fixed point after rescale",
           conj_fourier(w).sup_distance(w) / max(1.0, w.sup_norm()), tol)
    _check(checks, "witness symmetric",
           0.0 if group_core.symmetry_class(w, tol=1e-8) == "symmetric" else 1.0, 0.5)
    return "verified" if all(c["pass"] for c in checks) else "failed"


def _verify_product(rec, budget, checks, notes) -> str:
    lam = eval_exact(rec.lam)
    l1, g1 = _factor_witness(rec.params["left"])
    l2, g2 = _factor_witness(rec.params["right"])
    d1, d2 = g1.modulus, g2.modulus
    d = rec.modulus
    if d1 * d2 != d or math.gcd(d1, d2) != 1:
        raise ContractViolation("factor moduli must be coprime with product d")
    vals = np.array([g1(k % d1) * g2(k % d2) for k in range(d)])
    f = GroupFunction(d, vals)
    _check(checks, "value identity", abs(lam - l1 * l2), 1e-9)
    _check(checks, "criticality",
           group_core.criticality_residual(f, l1 * l2), budget.tol * 10)
    return "verified" if all(c["pass"] for c in checks) else "failed"


def _verify_solver(rec, budget, checks, notes) -> str:
    d = rec.modulus
    lam = eval_exact(rec.lam)
    mode = rec.params.get("mode", "search")
    if mode == "fixed_point":
        rep = solver.probe_fixed_point(
            d, lam, starts=budget.starts, seed=budget.seed, tol=budget.solver_tol
        )
    elif mode == "reindexed":
        q = rec.params.get("q")
        if q is not None:
            cfg = SearchConfig(
                modulus=d, lam=lam, normalization="unit",
                fixed_point="reindexed", q=q,
                starts=budget.starts, seed=budget.seed, tol=budget.solver_tol,
            )
            res = find_critical_functions(cfg)
            rep = {
                "found": res.found,
                "witness": res.witnesses[0] if res.found else None,
                "q": q if res.found else None,
                "stats": {"starts": cfg.starts, "converged": res.converged,
                          "diverged": res.diverged},
            }
        else:
            rep = solver.probe_reindexed_fixed_point(
                d, lam, starts=budget.starts, seed=budget.seed, tol=budget.solver_tol
            )
    else:
        symmetry = rec.params.get("symmetry", "none")
        # constrained slices behave better without the f(1)=1 chart
        default_norm = "unit" if symmetry != "none" else "f1"
        cfg = SearchConfig(
            modulus=d, lam=lam,
            symmetry=symmetry,
            normalization=rec.params.get("normalization", default_norm),
            starts=budget.starts, seed=budget.seed, tol=budget.solver_tol,
        )
        res = find_critical_functions(cfg)
        rep = {
            "found": res.found,
            "witness": res.witnesses[0] if res.found else None,
            "stats": {"starts": cfg.starts, "converged": res.converged,
                      "diverged": res.diverged},
        }
    if rec.negative_fixture:
        if rep["found"]:
            notes.append("a witness appeared for a value recorded as non-critical")
            return "failed"
        notes.append(
            "no witness found, consistent with the recorded non-criticality "
            "(search cannot prove emptiness)"
        )
        return "inconclusive"
    if rep["found"]:
        w = rep["witness"]
        _check(checks, "criticality",
               group_core.criticality_residual(w, lam), budget.tol)
        return "witness-found" if all(c["pass"] for c in checks) else "failed"
    notes.append(f"no witness within budget ({rep['stats']})")
    return "inconclusive"


def _verify_polynomial(rec, budget, checks, notes) -> str:
    spec = rec.lam
    if not isinstance(spec, AlgebraicSpec):
        raise ContractViolation("polynomial records need an AlgebraicSpec value")
    roots = poly_roots(spec.coeffs)
    p = np.poly1d(np.asarray(spec.coeffs, float))
    scale = float(np.max(np.abs(spec.coeffs)))
    back = float(np.max(np.abs(p(roots))))
    _check(checks, "root backward error", back, 1e-9 * scale)
    lams = lambda_values(spec)
    moduli = [abs(l) for l in lams]
    notes.append(
        f"{len(lams)} values; moduli in [{min(moduli):.4f}, {max(moduli):.4f}]"
    )
    if rec.params.get("family") == "c10":
        n17 = sum(1 for m in moduli if abs(m - math.sqrt(17)) <= 1e-7)
        _check(checks, "8 values of modulus sqrt17", abs(n17 - 8), 0.5)
        n_real = sum(
            1 for r in poly_roots(spec.coeffs)
            if abs(r.imag) < 1e-9 and abs(r.real) < math.sqrt(17)
        )
        _check(checks, "4 real roots inside (-sqrt17, sqrt17)", abs(n_real - 4), 0.5)
    return "verified" if all(c["pass"] for c in checks) else "failed"


_VERIFIERS = {
    "explicit": _verify_explicit,
    "gaussian": _verify_gaussian,
    "dirichlet": _verify_dirichlet,
    "theta": _verify_theta,
    "product": _verify_product,
    "solver": _verify_solver,
    "polynomial": _verify_polynomial,
}


def verify_record(
    rec: CriticalValueRecord, budget: VerificationBudget | None = None
) -> dict:
    """Reproduce a record's value by its stated construction.

    Returns {"status", "checks", "notes"} with status one of "verified"
    (constructive check passed), "witness-found" (numerical search hit),
    "inconclusive" (search exhausted its budget; for negative fixtures
    this is the consistent outcome), or "failed".  Nothing here ever
    claims a value is NOT critical.
    """
    budget = budget or VerificationBudget()
    fn = _VERIFIERS.get(rec.construction)
    if fn is None:
        raise ContractViolation(f"unknown construction {rec.construction!r}")
    checks: list[dict] = []
    notes: list[str] = []
    status = fn(rec, budget, checks, notes)
    return {"status": status, "checks": checks, "notes": notes}


def theta_family_sweep(
    d_max: int, policy: theta.TruncationPolicy | None = None
) -> dict:
    """Symmetric fixed-point witnesses for every admissible (d, a, b), d <= d_max.

    For each pair: build f_0, check criticality and the real-offset eigen
    relation, confirm the witness is symmetric, and confirm the conjugate
    value through the conjugated witness.  Returns per-pair rows and an
    overall pass flag.
    """
    if d_max < 3 or d_max % 2 == 0:
        raise ContractViolation(f"d_max must be odd >= 3, got {d_max}")
    rows = []
    ok_all = True
    for (d, a, b) in theta.admissible_pairs(d_max):
        p = theta.make_params(d, a, b)
        tol = theta.default_tolerance(d, policy)
        f = theta.theta_critical_function(p, 0.0, policy)
        f = f * (1.0 / f.sup_norm())
        crit = group_core.relative_criticality_residual(f, p.lam0)
        eig = theta.eigen_residual_at_real(p, 0.0, policy)
        w = fixed_point_rescale(f, theta.eigen_factor_at_real(p, 0.0))
        fp = conj_fourier(w).sup_distance(w)
        sym = group_core.symmetry_class(w, tol=1e-8) == "symmetric"
        wc = w.conj()
        conj_crit = group_core.relative_criticality_residual(wc, p.lam0.conjugate())
        conj_fp = conj_fourier(wc).sup_distance(wc)
        ok = (
            crit <= tol and eig <= tol and fp <= tol and sym
            and conj_crit <= tol and conj_fp <= tol
        )
        ok_all = ok_all and ok
        rows.append({
            "d": d, "a": a, "b": b,
            "lam0": complex(p.lam0),
            "criticality": crit,
            "eigen_relation": eig,
            "fixed_point": fp,
            "symmetric": sym,
            "conjugate_criticality": conj_crit,
            "conjugate_fixed_point": conj_fp,
            "tolerance": tol,
            "pass": ok,
        })
    return {"rows": rows, "pass": ok_all, "pairs": len(rows)}


# ------------------------------------------------------------ serialization

def _lam_to_json(lam) -> dict:
    if isinstance(lam, AlgebraicSpec):
        return {
            "algebraic": {
                "kind": lam.kind,
                "modulus": lam.modulus,
                "a": lam.a,
                "b": lam.b,
                "coeffs": list(lam.coeffs),
                "trace_mult": lam.trace_mult,
                "norm": lam.norm,
            }
        }
    return {"tokens": lam}


def _lam_from_json(obj) -> object:
    if "algebraic" in obj:
        spec = obj["algebraic"]
        return AlgebraicSpec(
            kind=spec["kind"],
            modulus=spec["modulus"],
            a=spec["a"],
            b=spec["b"],
            coeffs=tuple(spec["coeffs"]),
            trace_mult=spec["trace_mult"],
            norm=spec["norm"],
        )
    return obj["tokens"]


def to_json(records: list[CriticalValueRecord] | None = None) -> str:
    """Versioned JSON document; canonical key order, bit-exact round-trip."""
    if records is None:
        records = load_catalog()
    doc = {
        "schema": SCHEMA,
        "records": [
            {
                "modulus": r.modulus,
                "lam": _lam_to_json(r.lam),
                "classes": sorted(r.classes),
                "construction": r.construction,
                "params": r.params,
                "origin": r.origin,
                "epsilon": r.epsilon,
                "possibly_incomplete": r.possibly_incomplete,
                "negative_fixture": r.negative_fixture,
                "notes": r.notes,
            }
            for r in records
        ],
    }
    return json.dumps(doc, sort_keys=True, indent=1)


def from_json(text: str) -> list[CriticalValueRecord]:
    doc = json.loads(text)
    if doc.get("schema") != SCHEMA:
        raise ContractViolation(f"unknown catalog schema {doc.get('schema')!r}")
    out = []
    for r in doc["records"]:
        out.append(
            CriticalValueRecord(
                modulus=r["modulus"],
                lam=_lam_from_json(r["lam"]),
                classes=frozenset(r["classes"]),
                construction=r["construction"],
                params=r["params"],
                origin=r["origin"],
                epsilon=r["epsilon"],
                possibly_incomplete=r["possibly_incomplete"],
                negative_fixture=r["negative_fixture"],
                notes=r["notes"],
            )
        )
    return out


def to_csv(records: list[CriticalValueRecord] | None = None) -> str:
    """d, lambda_real, lambda_imag, classes, provenance; families expand."""
    if records is None:
        records = load_catalog()
    buf = io.StringIO()
    buf.write("d,lambda_real,lambda_imag,classes,provenance\n")
    for r in records:
        cl = "|".join(sorted(r.classes)) if r.classes else "none"
        for v in record_lambdas(r):
            buf.write(f"{r.modulus},{v.real!r},{v.imag!r},{cl},{r.construction}\n")
    return buf.getvalue()
