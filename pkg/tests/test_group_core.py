import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from convsquare import group_core as gc
from convsquare.errors import ContractViolation

ODD_D = st.sampled_from([3, 5, 7, 9, 11, 13])


def rand_f(d, seed):
    rng = np.random.default_rng(seed)
    vals = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return gc.GroupFunction(d, vals)


def test_group_function_basics():
    f = gc.from_values([1, 2, 3])
    assert f(0) == 1 and f(4) == 2 and f(-1) == 3  # indices wrap mod d
    with pytest.raises(ContractViolation):
        gc.GroupFunction(4, np.zeros(4, complex))
    with pytest.raises(ContractViolation):
        gc.GroupFunction(5, np.zeros(3, complex))


def test_values_read_only():
    f = gc.delta(5)
    with pytest.raises(ValueError):
        f.values[0] = 2.0


def test_convolution_oracle():
    f = gc.from_values([1, 2, 3])
    out = gc.convolve(f, f)
    assert np.allclose(out.values, [13, 13, 10])


def test_reindex_oracle():
    f = gc.from_values([0, 1, 2, 3, 4])
    assert np.allclose(gc.reindex(f, 2).values, [0, 2, 4, 1, 3])
    with pytest.raises(ContractViolation):
        gc.reindex(f, 5)  # q must be a unit


@settings(max_examples=40, deadline=None)
@given(ODD_D, st.integers(min_value=0, max_value=2**31 - 1))
def test_fourier_unitary(d, seed):
    f = rand_f(d, seed)
    assert abs(gc.fourier(f).l2_norm() - f.l2_norm()) <= 1e-11 * max(1, f.l2_norm())


@settings(max_examples=40, deadline=None)
@given(ODD_D, st.integers(min_value=0, max_value=2**31 - 1))
def test_conj_fourier_involution(d, seed):
    f = rand_f(d, seed)
    g = gc.conj_fourier(gc.conj_fourier(f))
    assert g.sup_distance(f) <= 1e-11 * max(1.0, f.sup_norm())


@settings(max_examples=40, deadline=None)
@given(ODD_D, st.integers(min_value=0, max_value=2**31 - 1))
def test_convolution_theorem(d, seed):
    f = rand_f(d, seed)
    g = rand_f(d, seed + 1)
    lhs = gc.fourier(gc.convolve(f, g)).values
    rhs = math.sqrt(d) * gc.fourier(f).values * gc.fourier(g).values
    assert np.max(np.abs(lhs - rhs)) <= 1e-10 * max(1.0, np.max(np.abs(rhs)))


def test_conj_fourier_is_antilinear():
    f = rand_f(7, 11)
    c = 2.0 - 1.5j
    lhs = gc.conj_fourier(c * f).values
    rhs = np.conj(c) * gc.conj_fourier(f).values
    assert np.max(np.abs(lhs - rhs)) <= 1e-12


def test_criticality_trivial_witnesses():
    for d in (3, 5, 9, 17):
        assert gc.criticality_residual(gc.delta(d), 1.0) <= 1e-14
        assert gc.criticality_residual(gc.ones(d), float(d)) <= 1e-12


@settings(max_examples=30, deadline=None)
@given(
    st.sampled_from([3, 5, 7, 9]),
    st.complex_numbers(
        min_magnitude=0.1, max_magnitude=10.0,
        allow_nan=False, allow_infinity=False,
    ),
)
def test_criticality_scale_invariant(d, c):
    # the equation is invariant under any complex rescaling of f
    eta = -cmath.exp(1j * math.pi / d)
    f = gc.from_values([eta ** (k * k % (2 * d)) for k in range(d)])
    lam = complex(gc.convolve(f, f).values[0] / f.values[0] ** 2)
    base = gc.relative_criticality_residual(f, lam)
    scaled = gc.relative_criticality_residual(c * f, lam)
    assert base <= 1e-12
    assert scaled <= 1e-10


def test_symmetry_class():
    sym = gc.from_values([1, 2, 3, 3, 2])
    anti = gc.from_values([0, 1, 2, -2, -1])
    nei = gc.from_values([1, 2, 3, 4, 5])
    assert gc.symmetry_class(sym) == "symmetric"
    assert gc.symmetry_class(anti) == "antisymmetric"
    assert gc.symmetry_class(nei) == "neither"


def test_fixed_point_rescale():
    # start from a known eigenfunction of the conjugate transform
    d = 3
    eta = -cmath.exp(1j * math.pi / d)
    f = gc.from_values([eta ** (k * k) for k in range(d)])
    g = gc.conj_fourier(f)
    alpha = g.values[0] / f.values[0]
    assert abs(abs(alpha) - 1) <= 1e-12
    w = gc.fixed_point_rescale(f, alpha)
    assert gc.conj_fourier(w).sup_distance(w) <= 1e-12
    with pytest.raises(ContractViolation):
        gc.fixed_point_rescale(f, 2.0)  # factor must be unimodular


def test_fixed_point_scaling_freedom():
    # positive real rescaling preserves the fixed-point property
    d = 3
    eta = -cmath.exp(1j * math.pi / d)
    f = gc.from_values([eta ** (k * k) for k in range(d)])
    w = gc.fixed_point_rescale(f, gc.conj_fourier(f).values[0] / f.values[0])
    for t in (0.5, 2.0, 7.25):
        assert gc.conj_fourier(t * w).sup_distance(t * w) <= 1e-11 * t


def test_pairing_and_norms():
    f = gc.from_values([1, 1j, -1])
    assert f.sup_norm() == 1.0
    assert abs(f.l2_norm() - math.sqrt(3)) <= 1e-15
    assert f.sup_distance(f) == 0.0
