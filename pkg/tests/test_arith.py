import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from convsquare import arith
from convsquare.errors import ContractViolation


def test_require_odd_modulus():
    assert arith.require_odd_modulus(3) == 3
    assert arith.require_odd_modulus(17) == 17
    for bad in (4, 2, 1, 0, -3, 10):
        with pytest.raises(ContractViolation):
            arith.require_odd_modulus(bad)


def test_factorize_small():
    f = arith.factorize(360)
    assert f.factors == ((2, 3), (3, 2), (5, 1))
    assert arith.factorize(1).factors == ()
    assert arith.factorize(97).factors == ((97, 1),)


@given(st.integers(min_value=1, max_value=5000))
def test_factorize_reconstructs(n):
    f = arith.factorize(n)
    prod = 1
    for p, e in f.factors:
        prod *= p**e
    assert prod == n


def test_euler_phi_brute():
    for n in range(1, 200):
        brute = sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)
        assert arith.euler_phi(n) == brute


def test_jacobi_symbol_values():
    assert arith.jacobi_symbol(2, 5) == -1
    assert arith.jacobi_symbol(2, 15) == 1
    assert arith.jacobi_symbol(3, 9) == 0
    # multiplicativity in the top argument
    assert arith.jacobi_symbol(2 * 7, 15) == (
        arith.jacobi_symbol(2, 15) * arith.jacobi_symbol(7, 15)
    )


def test_jacobi_euler_criterion():
    # on an odd prime the symbol agrees with a^((p-1)/2) mod p
    primes = [p for p in range(3, 100, 2) if arith.factorize(p).factors == ((p, 1),)]
    for p in primes:
        for a in range(p):
            euler = pow(a, (p - 1) // 2, p)
            expect = 0 if euler == 0 else (1 if euler == 1 else -1)
            assert arith.jacobi_symbol(a, p) == expect


def test_mult_order():
    assert arith.mult_order(2, 5) == 4
    assert arith.mult_order(2, 9) == 6
    for d in (5, 9, 15, 21):
        phi = arith.euler_phi(d)
        for a in range(1, d):
            if math.gcd(a, d) != 1:
                continue
            k = arith.mult_order(a, d)
            assert pow(a, k, d) == 1
            assert phi % k == 0


def test_unit_group_structures():
    g5 = arith.unit_group(5)
    assert g5.orders == (4,)
    g9 = arith.unit_group(9)
    assert g9.orders == (6,)
    g15 = arith.unit_group(15)
    assert sorted(g15.orders) == [2, 4]


def test_unit_group_enumerates_all_units():
    for d in range(3, 200, 2):
        units = set(arith.unit_group(d).enumerate_units())
        expect = {k for k in range(1, d) if math.gcd(k, d) == 1}
        assert units == expect, d


def test_least_nonresidue():
    assert arith.least_nonresidue(5) == 2
    assert arith.least_nonresidue(13) == 2
    assert arith.least_nonresidue(17) == 3
    # perfect squares have Jacobi symbol +1 on every unit
    for d in (9, 25, 49):
        with pytest.raises(ContractViolation):
            arith.least_nonresidue(d)


@settings(max_examples=60)
@given(st.integers(min_value=1, max_value=120), st.integers(min_value=1, max_value=60))
def test_jacobi_periodic_in_top(a, k):
    d = 2 * k + 1
    if d < 3:
        return
    assert arith.jacobi_symbol(a, d) == arith.jacobi_symbol(a + d, d)
