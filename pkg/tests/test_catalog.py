import cmath
import math

import pytest

from convsquare import catalog as cat, theta as th
from convsquare.errors import ContractViolation

PER_D = {3: 4, 5: 8, 7: 8, 9: 16, 11: 22, 13: 18, 15: 49, 17: 29}


# ---------------------------------------------------------------- tokens

@pytest.mark.parametrize("text,value", [
    ("3", 3.0),
    ("-sqrt5", -math.sqrt(5)),
    ("1+2i", 1 + 2j),
    ("2i", 2j),
    ("i sqrt 3", 1j * math.sqrt(3)),
    ("-(1+i)sqrt2", -(1 + 1j) * math.sqrt(2)),
    ("sqrt(10+2 sqrt 5)", math.sqrt(10 + 2 * math.sqrt(5))),
    ("(1+sqrt5) + i sqrt(9-2 sqrt5)", (1 + math.sqrt(5)) + 1j * math.sqrt(9 - 2 * math.sqrt(5))),
    ("7+4sqrt2", 7 + 4 * math.sqrt(2)),
])
def test_parse_and_eval(text, value):
    tokens = cat.parse_lambda(text)
    assert cmath.isclose(cat.eval_exact(tokens), value, rel_tol=1e-14, abs_tol=1e-14)


@pytest.mark.parametrize("text", ["sqrt", "2+", "foo", "(1", "1**2", ""])
def test_parse_rejects_garbage(text):
    with pytest.raises(ContractViolation):
        cat.parse_lambda(text)


def test_format_round_trips():
    texts = ["3", "-sqrt5", "1+2i", "-1-2i", "i sqrt3", "sqrt(10+2 sqrt5) + i sqrt(5-2 sqrt5)",
             "-(sqrt3+i sqrt2)(sqrt2+i)", "2 sqrt3 + i sqrt3"]
    for text in texts:
        tokens = cat.parse_lambda(text)
        rendered = cat.format_lambda(tokens)
        again = cat.parse_lambda(rendered)
        assert cmath.isclose(
            cat.eval_exact(tokens), cat.eval_exact(again), rel_tol=1e-14, abs_tol=1e-14
        ), (text, rendered)


def test_eval_rejects_malformed_tokens():
    with pytest.raises(ContractViolation):
        cat.eval_exact(["pow", ["int", 2], ["int", 3]])
    with pytest.raises(ContractViolation):
        cat.eval_exact(["int"])


# ---------------------------------------------------------------- records

def test_catalog_counts():
    recs = cat.load_catalog()
    assert len(recs) == sum(PER_D.values())
    for d, n in PER_D.items():
        assert len(cat.records_for(d)) == n, d


def test_record_validation():
    lam = cat.parse_lambda("1+2i")
    with pytest.raises(ContractViolation):
        cat.CriticalValueRecord(
            modulus=5, lam=lam, classes=frozenset({"critical", "fixed_point"}),
            construction="explicit", params={}, origin="x",
        )  # fixed_point without reindexed_fixed_point
    with pytest.raises(ContractViolation):
        cat.CriticalValueRecord(
            modulus=5, lam=lam, classes=frozenset({"reindexed_fixed_point"}),
            construction="explicit", params={}, origin="x",
        )  # reindexed without critical
    with pytest.raises(ContractViolation):
        cat.CriticalValueRecord(
            modulus=5, lam=lam, classes=frozenset({"critical"}),
            construction="explicit", params={}, origin="x", negative_fixture=True,
        )  # fixtures must be empty-classed
    with pytest.raises(ContractViolation):
        cat.CriticalValueRecord(
            modulus=5, lam=lam, classes=frozenset({"critical"}),
            construction="magic", params={}, origin="x",
        )
    with pytest.raises(ContractViolation):
        cat.CriticalValueRecord(
            modulus=5, lam=lam, classes=frozenset(), construction="explicit",
            params={}, origin="x",
        )  # positive record must at least be critical


def test_tagged_values_have_weil_modulus():
    for rec in cat.load_catalog():
        if rec.negative_fixture or not isinstance(rec.lam, list):
            continue
        if "fixed_point" in rec.classes or "reindexed_fixed_point" in rec.classes:
            lam = cat.eval_exact(rec.lam)
            assert abs(abs(lam) - math.sqrt(rec.modulus)) <= 1e-9, (rec.modulus, rec.lam)


def test_fixed_point_values_closed_under_conjugation():
    # conj composed with a symmetric witness solves the conjugate value,
    # so the tagged sets must be stable under lam -> conj(lam)
    for d in PER_D:
        tagged = [
            rec for rec in cat.records_for(d)
            if "fixed_point" in rec.classes and isinstance(rec.lam, list)
        ]
        keys = {cat._value_key(cat.eval_exact(r.lam)) for r in tagged}
        for rec in tagged:
            lam = cat.eval_exact(rec.lam)
            assert cat._value_key(lam.conjugate()) in keys, (d, lam)


def test_negative_fixtures():
    recs = cat.load_catalog()
    neg = [r for r in recs if r.negative_fixture]
    assert len(neg) == 5
    assert sorted(r.modulus for r in neg) == [5, 5, 9, 11, 11]
    neg_keys = {(r.modulus, cat._value_key(cat.eval_exact(r.lam))) for r in neg}
    for rec in recs:
        if rec.negative_fixture or not isinstance(rec.lam, list):
            continue
        key = (rec.modulus, cat._value_key(cat.eval_exact(rec.lam)))
        assert key not in neg_keys


def test_record_lambdas_expands_families():
    c10 = [r for r in cat.records_for(17) if r.construction == "polynomial"
           and r.params.get("family") == "c10"]
    assert len(c10) == 1
    assert len(cat.record_lambdas(c10[0])) == 20


# ------------------------------------------------------------ verification

def _find(d, construction, pred=lambda r: True):
    for rec in cat.records_for(d):
        if rec.construction == construction and not rec.negative_fixture and pred(rec):
            return rec
    raise AssertionError(f"no {construction} record at d={d}")


def test_verify_explicit_record():
    rep = cat.verify_record(_find(3, "explicit"))
    assert rep["status"] == "verified"
    assert all(c["pass"] for c in rep["checks"])


def test_verify_gaussian_record():
    rep = cat.verify_record(_find(7, "gaussian"))
    assert rep["status"] == "verified"


def test_verify_dirichlet_record():
    rep = cat.verify_record(_find(5, "dirichlet"))
    assert rep["status"] == "verified"


def test_verify_theta_record():
    rep = cat.verify_record(_find(9, "theta"))
    assert rep["status"] == "verified"


def test_verify_product_record():
    rep = cat.verify_record(_find(15, "product"))
    assert rep["status"] == "verified"


def test_verify_polynomial_record():
    rep = cat.verify_record(_find(15, "polynomial"))
    assert rep["status"] == "verified"


def test_verify_solver_record_small_budget():
    rec = _find(9, "solver", lambda r: r.params.get("mode") == "fixed_point")
    rep = cat.verify_record(rec, cat.VerificationBudget(starts=150, seed=0))
    assert rep["status"] == "witness-found"


def test_negative_fixture_stays_inconclusive():
    rec = next(r for r in cat.records_for(9) if r.negative_fixture)
    rep = cat.verify_record(rec, cat.VerificationBudget(starts=40, seed=0))
    assert rep["status"] == "inconclusive"
    assert any("consistent" in n for n in rep["notes"])


# ---------------------------------------------------------- serialization

def test_json_round_trip_is_bit_exact():
    text = cat.to_json()
    recs = cat.from_json(text)
    assert recs == cat.load_catalog()
    assert cat.to_json(recs) == text


def test_from_json_rejects_wrong_schema():
    text = cat.to_json().replace(cat.SCHEMA, "other-schema/9")
    with pytest.raises(ContractViolation):
        cat.from_json(text)


def test_csv_shape():
    lines = cat.to_csv().strip().split("\n")
    assert lines[0] == "d,lambda_real,lambda_imag,classes,provenance"
    assert len(lines) - 1 == 202
    assert sum(1 for ln in lines[1:] if ln.startswith("17,")) == 48
    for ln in lines[1:]:
        parts = ln.split(",")
        assert len(parts) == 5
        float(parts[1]), float(parts[2])


# ---------------------------------------------------------------- sweep

def test_theta_family_sweep_d9():
    sweep = cat.theta_family_sweep(9)
    assert sweep["pairs"] == len(th.admissible_pairs(9))
    assert len(sweep["rows"]) == sweep["pairs"]
    assert sweep["pass"]
