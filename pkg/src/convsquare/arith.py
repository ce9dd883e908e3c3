"""Integer and modular arithmetic: factorization, Jacobi symbol, unit groups.

Everything here is exact integer arithmetic.  Moduli of interest are small
(odd d up to a few hundred), so trial division and exhaustive order search
are entirely adequate and keep the code dependency-free.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ContractViolation

__all__ = [
    "Factorization",
    "UnitGroupStructure",
    "factorize",
    "jacobi_symbol",
    "unit_group",
    "euler_phi",
    "mult_order",
    "least_nonresidue",
    "require_odd_modulus",
]


def require_odd_modulus(d: int, minimum: int = 3) -> int:
    d = int(d)
    if d < minimum or d % 2 == 0:
        raise ContractViolation(f"modulus must be odd and >= {minimum}, got {d}")
    return d


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]  # (prime, exponent), primes increasing


def factorize(n: int) -> Factorization:
    """Complete prime factorization of n >= 1 by trial division."""
    n = int(n)
    if n < 1:
        raise ContractViolation(f"factorize needs n >= 1, got {n}")
    if n > 10 ** 9:
        raise ContractViolation("factorize is limited to n <= 10^9")
    m = n
    out: list[tuple[int, int]] = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return Factorization(n, tuple(out))


def jacobi_symbol(n: int, d: int) -> int:
    """Jacobi symbol (n/d) for odd positive d; (n/1) = 1, and 0 iff gcd(n,d) > 1."""
    d = int(d)
    if d <= 0 or d % 2 == 0:
        raise ContractViolation(f"jacobi_symbol needs odd positive d, got {d}")
    n = int(n) % d
    r = 1
    while n != 0:
        while n % 2 == 0:
            n //= 2
            if d % 8 in (3, 5):
                r = -r
        n, d = d, n
        if n % 4 == 3 and d % 4 == 3:
            r = -r
        n %= d
    return r if d == 1 else 0


def euler_phi(n: int) -> int:
    phi = 1
    for p, e in factorize(n).factors:
        phi *= (p - 1) * p ** (e - 1)
    return phi


def mult_order(a: int, d: int) -> int:
    """Multiplicative order of a modulo d; a must be a unit."""
    a = int(a) % d
    if math.gcd(a, d) != 1:
        raise ContractViolation(f"{a} is not a unit mod {d}")
    # order divides phi(d); walk the divisors of phi in increasing order
    phi = euler_phi(d)
    order = phi
    for p, e in factorize(phi).factors:
        for _ in range(e):
            if pow(a, order // p, d) == 1:
                order //= p
            else:
                break
    return order


@dataclass(frozen=True)
class UnitGroupStructure:
    modulus: int
    generators: tuple[int, ...]
    orders: tuple[int, ...]  # component orders; their product is phi(modulus)

    def enumerate_units(self) -> dict[int, tuple[int, ...]]:
        """Map each unit to its mixed-radix exponent vector over the generators."""
        units: dict[int, tuple[int, ...]] = {1 % self.modulus: (0,) * len(self.generators)}
        for i, (g, n) in enumerate(zip(self.generators, self.orders)):
            new = dict(units)
            gk = 1
            for e in range(1, n):
                gk = gk * g % self.modulus
                for u, vec in units.items():
                    w = list(vec)
                    w[i] = e
                    new[u * gk % self.modulus] = tuple(w)
            units = new
        return units


def _prime_power_generator(p: int, e: int) -> int:
    """Smallest generator of the (cyclic) unit group mod p^e, p odd."""
    pe = p ** e
    target = (p - 1) * p ** (e - 1)
    for g in range(2, pe):
        if math.gcd(g, pe) == 1 and mult_order(g, pe) == target:
            return g
    raise AssertionError("no generator found")  # unreachable for odd prime powers


def unit_group(d: int) -> UnitGroupStructure:
    """CRT decomposition of (Z/dZ)* for odd d: one cyclic factor per prime power."""
    require_odd_modulus(d)
    gens: list[int] = []
    orders: list[int] = []
    for p, e in factorize(d).factors:
        pe = p ** e
        g = _prime_power_generator(p, e)
        cofactor = d // pe
        # lift g to a residue mod d that is g mod p^e and 1 mod the cofactor
        lifted = _crt(g, pe, 1, cofactor)
        gens.append(lifted)
        orders.append((p - 1) * p ** (e - 1))
    return UnitGroupStructure(d, tuple(gens), tuple(orders))


def _crt(a1: int, m1: int, a2: int, m2: int) -> int:
    if m2 == 1:
        return a1 % m1
    inv = pow(m1, -1, m2)
    return (a1 + m1 * ((a2 - a1) * inv % m2)) % (m1 * m2)


def least_nonresidue(d: int) -> int:
    """Smallest unit u mod d with Jacobi symbol (u/d) = -1."""
    require_odd_modulus(d)
    for u in range(2, d):
        if jacobi_symbol(u, d) == -1:
            return u
    raise ContractViolation(f"no quadratic non-residue mod {d}")
