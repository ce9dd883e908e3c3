import cmath
import math

import numpy as np
import pytest

from convsquare import arith, characters as ch, group_core as gc
from convsquare.errors import ContractViolation

# distinct critical values and multiplicities per modulus, frozen from the
# exact enumeration; keys are (round(re, 6), round(im, 6))
EXPECTED_LAMBDA = {
    5: {(1.0, 2.0): 1, (1.0, -2.0): 1},
    7: {(2.0, 1.732051): 1, (2.0, -1.732051): 1,
        (-2.0, 1.732051): 1, (-2.0, -1.732051): 1},
    9: {(3.0, 0.0): 4},
    11: {},  # filled below from the quartic parametrization
    13: {(3.0, 2.0): 2, (3.0, -2.0): 2, (-3.0, 2.0): 1, (-3.0, -2.0): 1,
         (-1.0, 3.464102): 2, (-1.0, -3.464102): 2},
    17: {},
}
for eps in (1, -1):
    re = 1 + eps * math.sqrt(5)
    im = math.sqrt(5 - 2 * eps * math.sqrt(5))
    for s_out in (1, -1):
        for s_in in (1, -1):
            EXPECTED_LAMBDA[11][(round(s_out * re, 6), round(s_in * im, 6))] = 1
EXPECTED_LAMBDA[17][(3.0, round(2 * math.sqrt(2), 6))] = 2
EXPECTED_LAMBDA[17][(3.0, round(-2 * math.sqrt(2), 6))] = 2
EXPECTED_LAMBDA[17][(-1.0, 4.0)] = 1
EXPECTED_LAMBDA[17][(-1.0, -4.0)] = 1
for eps in (1, -1):
    re = -1 + 2 * eps * math.sqrt(2)
    im = 2 * math.sqrt(2 + eps * math.sqrt(2))
    EXPECTED_LAMBDA[17][(round(re, 6), round(im, 6))] = 2
    EXPECTED_LAMBDA[17][(round(re, 6), round(-im, 6))] = 2

N0_EXPECTED = {5: 2, 7: 4, 9: 4, 11: 8, 13: 10, 15: 0, 17: 14}


def brute_primitive_count(d):
    return sum(1 for chi in ch.enumerate_characters(d) if ch.is_primitive(chi))


def brute_primitive_square_count(d):
    return sum(
        1 for chi in ch.enumerate_characters(d)
        if ch.is_primitive(chi) and ch.is_primitive(chi.square())
    )


def test_enumeration_count_and_group_law():
    for d in (5, 9, 15, 21):
        chars = ch.enumerate_characters(d)
        assert len(chars) == arith.euler_phi(d)
        a, b = chars[1], chars[-1]
        prod = a * b
        for k in range(d):
            if math.gcd(k, d) != 1:
                assert prod(k) == 0
            else:
                assert abs(prod(k) - a(k) * b(k)) <= 1e-12


def test_character_values_exact_roots_of_unity():
    for chi in ch.enumerate_characters(9):
        for k in range(1, 9):
            if math.gcd(k, 9) != 1:
                continue
            v = chi(k)
            assert abs(abs(v) - 1) <= 1e-15
            assert abs(v ** chi.order - 1) <= 1e-12


def test_conjugate_and_square():
    chi = ch.enumerate_characters(7)[1]
    for k in range(7):
        assert abs(chi.conjugate()(k) - np.conj(chi(k))) <= 1e-15
        assert abs(chi.square()(k) - chi(k) ** 2) <= 1e-15


def test_trivial_character_gauss_sum():
    # mod 5 the trivial character sums the nontrivial fifth roots of unity
    chi0 = ch.enumerate_characters(5)[0]
    assert chi0.is_trivial
    assert abs(ch.gauss_sum(chi0) - (-1)) <= 1e-12


def test_legendre_gauss_sum_mod5():
    legendre = next(
        chi for chi in ch.enumerate_characters(5)
        if not chi.is_trivial and chi.order == 2
    )
    assert abs(ch.gauss_sum(legendre) - math.sqrt(5)) <= 1e-12


def test_jacobi_sum_oracle():
    # chi mod 5 with chi(2) = i has J(chi, chi) = -1 - 2i
    chi = next(c for c in ch.enumerate_characters(5) if abs(c(2) - 1j) < 1e-12)
    assert abs(ch.jacobi_sum(chi, chi) - (-1 - 2j)) <= 1e-12


def test_conductor_and_primitivity_mod9():
    prim = [chi for chi in ch.enumerate_characters(9) if ch.is_primitive(chi)]
    assert len(prim) == 4
    for chi in ch.enumerate_characters(9):
        assert ch.conductor(chi) in (1, 3, 9)


def test_count_primitive_closed_form():
    for d in range(3, 100, 2):
        assert ch.count_primitive(d) == brute_primitive_count(d), d


def test_count_primitive_square_closed_form():
    for d in range(3, 100, 2):
        assert ch.count_primitive_square(d) == brute_primitive_square_count(d), d


def test_admissible_counts_frozen():
    for d, n0 in N0_EXPECTED.items():
        assert ch.count_primitive_square(d) == n0
        assert len(ch.admissible_characters(d)) == n0


def test_lambda_chi_requires_primitive_square():
    legendre = next(
        chi for chi in ch.enumerate_characters(5)
        if not chi.is_trivial and chi.order == 2
    )
    with pytest.raises(ContractViolation):
        ch.lambda_chi(legendre)


@pytest.mark.parametrize("d", sorted(EXPECTED_LAMBDA))
def test_lambda_chi_multisets(d):
    got = {}
    for v, c in ch.lambda_chi_values(d):
        got[(round(v.real, 6), round(v.imag, 6))] = c
    assert got == EXPECTED_LAMBDA[d]


def test_gauss_sum_modulus_primitive():
    for d in (5, 7, 9, 11):
        for chi in ch.enumerate_characters(d):
            if ch.is_primitive(chi):
                assert abs(abs(ch.gauss_sum(chi)) - math.sqrt(d)) <= 1e-10


def test_character_transform_eigen_relation():
    # conj_fourier(chi) = (G(conj chi)/sqrt d) chi for primitive chi
    for d in (5, 7, 13):
        for chi in ch.admissible_characters(d):
            f = chi.as_group_function()
            alpha = ch.gauss_sum(chi.conjugate()) / math.sqrt(d)
            lhs = gc.conj_fourier(f).values
            assert np.max(np.abs(lhs - alpha * f.values)) <= 1e-12


def test_criticality_of_admissible_characters():
    for d in (5, 7, 9, 11, 13, 17):
        for chi in ch.admissible_characters(d):
            lam = ch.lambda_chi(chi)
            f = chi.as_group_function()
            assert gc.criticality_residual(f, lam) <= 1e-12
            assert abs(abs(lam) - math.sqrt(d)) <= 1e-12
