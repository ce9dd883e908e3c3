import math

import numpy as np
import pytest

from convsquare import group_core as gc, solver as sv
from convsquare.errors import ContractViolation


def _search(d, lam, **kw):
    return sv.find_critical_functions(sv.SearchConfig(modulus=d, lam=lam, **kw))


def test_config_validation():
    with pytest.raises(ContractViolation):
        sv.SearchConfig(modulus=4, lam=2.0)
    with pytest.raises(ContractViolation):
        sv.SearchConfig(modulus=5, lam=1.0, symmetry="odd")
    with pytest.raises(ContractViolation):
        sv.SearchConfig(modulus=5, lam=1.0, fixed_point="reindexed")  # q missing
    with pytest.raises(ContractViolation):
        sv.SearchConfig(modulus=5, lam=1.0, fixed_point="reindexed", q=5)
    with pytest.raises(ContractViolation):
        sv.SearchConfig(modulus=5, lam=1.0, q=2)  # q without reindexed mode
    with pytest.raises(ContractViolation):
        sv.SearchConfig(modulus=5, lam=1.0, starts=0)


def test_search_is_deterministic():
    a = _search(5, -math.sqrt(5), starts=300, seed=11)
    b = _search(5, -math.sqrt(5), starts=300, seed=11)
    assert len(a.witnesses) == len(b.witnesses)
    for wa, wb in zip(a.witnesses, b.witnesses):
        assert np.array_equal(wa.values, wb.values)
    assert a.criticality_residuals == b.criticality_residuals


def test_constant_witness_for_lam_d():
    # f = 1 solves the equation with lam = d; f(1)=1 normalization makes
    # the all-ones vector the canonical representative
    res = _search(5, 5.0, starts=60, seed=0)
    assert res.found
    ones = np.ones(5)
    assert any(np.max(np.abs(w.values - ones)) <= 1e-8 for w in res.witnesses)
    for r in res.criticality_residuals:
        assert r <= 1e-9


def test_d5_minus_sqrt5_witness_census():
    res = _search(5, -math.sqrt(5), starts=2000, seed=7)
    assert len(res.witnesses) == 10
    for w, r in zip(res.witnesses, res.criticality_residuals):
        assert r <= 1e-9
        assert abs(w.values[1] - 1.0) <= 1e-9  # f(1) = 1 gauge


def test_d5_minus_sqrt5_witnesses_are_gaussians():
    # the ten witnesses are exactly the Gaussian functions with
    # non-residue leading parameter, up to the f(1)=1 normalization
    from convsquare import gaussians as ga

    res = _search(5, -math.sqrt(5), starts=2000, seed=7)
    expected = []
    for u in (2, 3):
        for v in range(5):
            f = ga.gaussian_function(ga.GaussianParams(5, u, v))
            expected.append(f.values / f.values[1])
    matched = 0
    for w in res.witnesses:
        if any(np.max(np.abs(w.values - e)) <= 1e-6 for e in expected):
            matched += 1
    assert matched == 10


def test_probe_fixed_point_positive():
    out = sv.probe_fixed_point(5, 1 + 2j, starts=200, seed=0)
    assert out["found"]
    assert out["residuals"]["criticality"] <= 1e-9
    assert out["residuals"]["constraints"] <= 1e-9
    w = out["witness"]
    assert (gc.conj_fourier(w) - w).sup_norm() <= 1e-8


def test_probe_fixed_point_modulus_constant():
    lam = 1j * math.sqrt(3)
    out = sv.probe_fixed_point(3, lam, starts=200, seed=0)
    assert out["found"]
    mods = np.abs(out["witness"].values)
    assert np.max(mods) - np.min(mods) <= 1e-8


def test_probe_fixed_point_negative_for_minus_sqrt5():
    out = sv.probe_fixed_point(5, -math.sqrt(5), starts=400, seed=0)
    assert not out["found"]
    assert out["stats"]["starts"] == 400


def test_probe_reindexed_finds_q2():
    out = sv.probe_reindexed_fixed_point(5, -math.sqrt(5), starts=200, seed=0)
    assert out["found"]
    assert out["q"] == 2
    w = out["witness"]
    assert (gc.conj_fourier(w) - gc.reindex(w, 2)).sup_norm() <= 1e-8


def test_modulus_gate_is_conclusive():
    # |lam| != sqrt(d) rules the class out before any numerics run
    out = sv.probe_fixed_point(5, 1.0)
    assert not out["found"]
    assert out["conclusive"]
    assert "sqrt" in out["reason"]
    assert out["stats"]["starts"] == 0
    out2 = sv.probe_reindexed_fixed_point(7, 2.0)
    assert not out2["found"] and out2["conclusive"]


def test_poly_roots_backward_error():
    rng = np.random.default_rng(5)
    for _ in range(20):
        deg = int(rng.integers(2, 9))
        c = rng.integers(-9, 10, size=deg + 1).astype(float)
        if c[0] == 0:
            c[0] = 1.0
        roots = sv.poly_roots(c)
        assert len(roots) == deg
        p = np.poly1d(c)
        scale = np.max(np.abs(c))
        for r in roots:
            assert abs(p(r)) <= 1e-9 * scale * max(1.0, abs(r)) ** deg


def test_poly_roots_validation():
    with pytest.raises(ContractViolation):
        sv.poly_roots([3.0])
    with pytest.raises(ContractViolation):
        sv.poly_roots([0.0, 1.0, 2.0])


def test_cluster_roots():
    roots = [1.0, 1.0 + 1e-9, 2.0 + 1j, 2.0 + 1j, -3.0]
    clusters = sv.cluster_roots(roots, tol=1e-7)
    as_dict = {complex(round(z.real, 6), round(z.imag, 6)): m for z, m in clusters}
    assert as_dict == {(-3 + 0j): 1, (1 + 0j): 2, (2 + 1j): 2}


def test_algebraic_spec_validation():
    with pytest.raises(ContractViolation):
        sv.AlgebraicSpec(kind="quartic", modulus=5, a=1, b=3)  # a+b != d
    with pytest.raises(ContractViolation):
        sv.AlgebraicSpec(kind="poly", coeffs=(1, 2.5, 3))
    with pytest.raises(ContractViolation):
        sv.AlgebraicSpec(kind="poly", coeffs=(0, 1, 2))
    with pytest.raises(ContractViolation):
        sv.AlgebraicSpec(kind="trace_family", coeffs=(1, -1), trace_mult=0, norm=3)
    with pytest.raises(ContractViolation):
        sv.AlgebraicSpec(kind="cubic", coeffs=(1, 1))


def test_quartic_spec_values():
    spec = sv.AlgebraicSpec(kind="quartic", modulus=5, a=1, b=4)
    vals = sv.lambda_values(spec)
    assert len(vals) == 4
    expected = {(s1 * 1.0 + s2 * 2.0j) for s1 in (1, -1) for s2 in (1, -1)}
    for v in vals:
        assert min(abs(v - e) for e in expected) <= 1e-9
    chk = sv.weil_check(spec, 5)
    assert chk["is_weil"]
    assert all(abs(m - math.sqrt(5)) <= 1e-9 for m in chk["moduli"])


def test_family_counts():
    assert len(sv.lambda_values(sv.FAMILY_C10)) == 20
    assert len(sv.lambda_values(sv.FAMILY_B3A)) == 6
    assert len(sv.lambda_values(sv.FAMILY_B3B)) == 6
    assert len(sv.lambda_values(sv.FAMILY_B10)) == 20


def test_family_c10_is_not_weil():
    chk = sv.weil_check(sv.FAMILY_C10, 17)
    assert not chk["is_weil"]
    root = math.sqrt(17)
    on_circle = sum(1 for m in chk["moduli"] if abs(m - root) <= 1e-7)
    assert on_circle == 8
    # the remaining values pair into real reciprocal-norm couples
    off = [m for m in chk["moduli"] if abs(m - root) > 1e-7]
    assert len(off) == 12


def test_b_families_are_not_weil():
    for fam in (sv.FAMILY_B3A, sv.FAMILY_B3B, sv.FAMILY_B10):
        assert not sv.weil_check(fam, 15)["is_weil"]


def test_family_c10_real_root_count():
    roots = sv.poly_roots(sv.FAMILY_C10.coeffs)
    real = roots[np.abs(roots.imag) <= 1e-9]
    assert len(real) == 4
    assert np.all(np.abs(real.real) < math.sqrt(17))
