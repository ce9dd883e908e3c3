import cmath
import math

import numpy as np
import pytest

from convsquare import arith, gaussians as ga, group_core as gc
from convsquare.errors import ContractViolation

ODD_D = list(range(3, 32, 2))


def test_eta_power_exact_unit_root():
    for d in (3, 5, 9, 17):
        eta = -cmath.exp(1j * math.pi / d)
        for m in range(-3 * d, 3 * d):
            assert abs(ga.eta_power(d, m) - eta**m) <= 1e-12
        assert abs(ga.eta_power(d, d) - 1.0) <= 1e-15  # eta^d = 1 exactly


@pytest.mark.parametrize("d", list(range(3, 52, 2)))
def test_gauss_sum_closed_form(d):
    direct = ga.classical_gauss_sum(d)
    closed = ga.gauss_sum_closed_form(d)
    assert abs(direct - closed) <= 1e-9 * math.sqrt(d)
    if d % 4 == 1:
        assert abs(closed - math.sqrt(d)) <= 1e-12
    else:
        assert abs(closed - 1j * math.sqrt(d)) <= 1e-12


def test_params_validation():
    with pytest.raises(ContractViolation):
        ga.GaussianParams(9, 3, 0)  # u must be a unit
    p = ga.GaussianParams(5, 7, 6)
    assert p.u == 2 and p.v == 1  # parameters reduce mod d


@pytest.mark.parametrize("d", ODD_D)
def test_gaussian_criticality(d):
    rng = np.random.default_rng(d)
    units = [u for u in range(1, d) if math.gcd(u, d) == 1]
    for _ in range(6):
        u = int(rng.choice(units))
        v = int(rng.integers(0, d))
        p = ga.GaussianParams(d, u, v)
        f = ga.gaussian_function(p)
        lam = ga.gaussian_critical_value(p)
        assert gc.criticality_residual(f, lam) <= 1e-9
        assert abs(abs(lam) - math.sqrt(d)) <= 1e-9


def test_transform_identity_frozen_scalars():
    # conj_fourier(f_{1,0}) = i f_{1,0} at d=7 and -f_{1,0} at d=5
    for d, expect in ((7, 1j), (5, -1.0)):
        p = ga.GaussianParams(d, 1, 0)
        q, scalar = ga.gaussian_conj_fourier_factor(p)
        assert q == p
        assert abs(scalar - expect) <= 1e-12


@pytest.mark.parametrize("d", ODD_D)
def test_transform_identity(d):
    rng = np.random.default_rng(100 + d)
    units = [u for u in range(1, d) if math.gcd(u, d) == 1]
    for _ in range(4):
        u = int(rng.choice(units))
        v = int(rng.integers(0, d))
        p = ga.GaussianParams(d, u, v)
        q, scalar = ga.gaussian_conj_fourier_factor(p)
        lhs = gc.conj_fourier(ga.gaussian_function(p)).values
        rhs = scalar * ga.gaussian_function(q).values
        assert np.max(np.abs(lhs - rhs)) <= 1e-9
        assert abs(abs(scalar) - 1.0) <= 1e-12


@pytest.mark.parametrize("d", ODD_D)
def test_unit_quadratic_exponential_is_critical(d):
    f = gc.from_values([ga.eta_power(d, k * k) for k in range(d)])
    gd = ga.gauss_sum_closed_form(d)
    assert gc.criticality_residual(f, gd) <= 1e-10


@pytest.mark.parametrize("d", list(range(3, 18, 2)))
def test_witness_plus_branch(d):
    lam, f, q = ga.gaussian_fixed_point_witness(d, "plus")
    assert q is None
    assert abs(lam - ga.gauss_sum_closed_form(d)) <= 1e-12
    assert gc.criticality_residual(f, lam) <= 1e-9
    assert gc.conj_fourier(f).sup_distance(f) <= 1e-9
    assert gc.symmetry_class(f) == "symmetric"


def test_witness_minus_branch():
    expected_q = {5: 2, 13: 6, 17: 6}
    for d in (3, 5, 7, 11, 13, 15, 17):
        lam, f, q = ga.gaussian_fixed_point_witness(d, "minus")
        assert abs(lam + ga.gauss_sum_closed_form(d)) <= 1e-12
        assert gc.criticality_residual(f, lam) <= 1e-9
        if d % 4 == 3:
            assert q is None
            assert gc.conj_fourier(f).sup_distance(f) <= 1e-9
        else:
            assert q == expected_q[d]
            assert gc.conj_fourier(f).sup_distance(gc.reindex(f, q)) <= 1e-9


def test_witness_minus_branch_perfect_square():
    # every Jacobi symbol mod 9 is +1, so -3 has no Gaussian witness
    with pytest.raises(ContractViolation):
        ga.gaussian_fixed_point_witness(9, "minus")
    with pytest.raises(ContractViolation):
        ga.gaussian_fixed_point_witness(3, "sideways")


def test_critical_value_matches_conjugated_gauss_sum():
    # lam carries the conjugate of g_d; the unconjugated value fails
    p = ga.GaussianParams(7, 1, 0)
    f = ga.gaussian_function(p)
    lam = ga.gaussian_critical_value(p)
    assert gc.criticality_residual(f, lam) <= 1e-12
    wrong = arith.jacobi_symbol(1, 7) * ga.gauss_sum_closed_form(7)
    assert gc.criticality_residual(f, wrong) > 1e-2
