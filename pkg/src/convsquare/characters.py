"""Dirichlet characters mod d: enumeration, conductors, Gauss/Jacobi sums.

A character is stored through exact integer data: the unit group (Z/dZ)* is
decomposed into cyclic components with generators g_i of orders n_i, and a
character is the choice of images chi(g_i) = exp(2 i pi a_i / n_i).  Every
value chi(k) is then exp(2 i pi s_k / N) with N = lcm(n_i) and an integer
s_k computed from discrete logarithms, so conductor and primitivity tests
are exact; floating point enters only when values are materialized.

The critical value attached to a character chi whose square is primitive is
lambda_chi = chi(4) J(chi, chi); the character itself is then a lambda_chi-
critical function, proportional to its own conjugate Fourier transform.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

import numpy as np

from . import arith
from .errors import ContractViolation
from .group_core import GroupFunction

__all__ = [
    "DirichletCharacter",
    "enumerate_characters",
    "conductor",
    "is_primitive",
    "count_primitive",
    "count_primitive_square",
    "gauss_sum",
    "jacobi_sum",
    "lambda_chi",
    "admissible_characters",
    "lambda_chi_values",
]


@dataclass(frozen=True)
class DirichletCharacter:
    modulus: int
    # s_k for units (chi(k) = exp(2 i pi s_k / exponent_lcm)), None off the units
    value_exponents: tuple = field(repr=False)
    exponent_lcm: int
    generator_images: tuple  # a_i mod n_i, the defining data; lexicographic sort key
    generator_orders: tuple

    @property
    def order(self) -> int:
        nonzero = [s for s in self.value_exponents if s]
        if not nonzero:
            return 1
        return self.exponent_lcm // math.gcd(self.exponent_lcm, *nonzero)

    def __call__(self, k: int) -> complex:
        s = self.value_exponents[int(k) % self.modulus]
        if s is None:
            return 0j
        return cmath.exp(2j * math.pi * s / self.exponent_lcm)

    @property
    def values(self) -> np.ndarray:
        out = np.zeros(self.modulus, dtype=complex)
        for k, s in enumerate(self.value_exponents):
            if s is not None:
                out[k] = cmath.exp(2j * math.pi * s / self.exponent_lcm)
        return out

    def as_group_function(self) -> GroupFunction:
        return GroupFunction(self.modulus, self.values)

    @property
    def is_trivial(self) -> bool:
        return all(s in (None, 0) for s in self.value_exponents)

    def __mul__(self, other: "DirichletCharacter") -> "DirichletCharacter":
        if other.modulus != self.modulus:
            raise ContractViolation("character product needs a common modulus")
        N = self.exponent_lcm
        vals = tuple(
            None if s is None else (s + t) % N
            for s, t in zip(self.value_exponents, other.value_exponents)
        )
        images = tuple(
            (a + b) % n
            for a, b, n in zip(
                self.generator_images, other.generator_images, self.generator_orders
            )
        )
        return DirichletCharacter(self.modulus, vals, N, images, self.generator_orders)

    def square(self) -> "DirichletCharacter":
        return self * self

    def conjugate(self) -> "DirichletCharacter":
        N = self.exponent_lcm
        vals = tuple(None if s is None else (-s) % N for s in self.value_exponents)
        images = tuple(
            (-a) % n for a, n in zip(self.generator_images, self.generator_orders)
        )
        return DirichletCharacter(self.modulus, vals, N, images, self.generator_orders)


@lru_cache(maxsize=None)
def _unit_logs(d: int):
    ug = arith.unit_group(d)
    return ug, ug.enumerate_units()


@lru_cache(maxsize=None)
def enumerate_characters(d: int) -> tuple[DirichletCharacter, ...]:
    """All phi(d) characters mod d, lexicographic in their generator images."""
    arith.require_odd_modulus(d)
    ug, logs = _unit_logs(d)
    N = math.lcm(*ug.orders) if ug.orders else 1
    weights = [N // n for n in ug.orders]
    out = []
    for images in product(*(range(n) for n in ug.orders)):
        vals: list = [None] * d
        for k, evec in logs.items():
            s = sum(a * e * w for a, e, w in zip(images, evec, weights)) % N
            vals[k] = s
        out.append(DirichletCharacter(d, tuple(vals), N, images, ug.orders))
    return tuple(out)


def conductor(chi: DirichletCharacter) -> int:
    """Smallest divisor d' of d such that chi is trivial on units = 1 mod d'."""
    d = chi.modulus
    divisors = sorted(e for e in range(1, d + 1) if d % e == 0)
    for dp in divisors:
        ok = True
        for k in range(d):
            if chi.value_exponents[k] is None:
                continue
            if k % dp == 1 % dp and chi.value_exponents[k] != 0:
                ok = False
                break
        if ok:
            return dp
    return d


def is_primitive(chi: DirichletCharacter) -> bool:
    return conductor(chi) == chi.modulus


def count_primitive(d: int) -> int:
    """N(d): number of primitive characters mod d (closed multiplicative form)."""
    if d < 1:
        raise ContractViolation("need d >= 1")
    if d == 1:
        return 1
    n = 1
    for p, e in arith.factorize(d).factors:
        n *= (p - 2) if e == 1 else (p - 1) ** 2 * p ** (e - 2)
    return n


def count_primitive_square(d: int) -> int:
    """N0(d): number of characters mod d whose square is primitive mod d."""
    arith.require_odd_modulus(d, minimum=1)
    if d == 1:
        return 1
    n = 1
    for p, e in arith.factorize(d).factors:
        n *= (p - 3) if e == 1 else (p - 1) ** 2 * p ** (e - 2)
    return n


def gauss_sum(chi: DirichletCharacter) -> complex:
    d = chi.modulus
    return sum(cmath.exp(2j * math.pi * k / d) * chi(k) for k in range(1, d))


def jacobi_sum(chi1: DirichletCharacter, chi2: DirichletCharacter) -> complex:
    if chi1.modulus != chi2.modulus:
        raise ContractViolation("jacobi_sum needs characters of the same modulus")
    d = chi1.modulus
    return sum(chi1(k) * chi2(1 - k) for k in range(d))


def lambda_chi(chi: DirichletCharacter) -> complex:
    """The critical value chi(4) J(chi, chi); requires chi^2 primitive."""
    if not is_primitive(chi.square()):
        raise ContractViolation(
            "lambda_chi is defined only when the square of the character is "
            f"primitive mod {chi.modulus}; this one has conductor(chi^2) = "
            f"{conductor(chi.square())}"
        )
    return chi(4) * jacobi_sum(chi, chi)


def admissible_characters(d: int) -> list[DirichletCharacter]:
    """Characters mod d whose square is primitive (deterministic order)."""
    return [chi for chi in enumerate_characters(d) if is_primitive(chi.square())]


def lambda_chi_values(d: int, dedup_tol: float = 1e-8):
    """Distinct lambda_chi values with multiplicities.

    Different characters may share a critical value, so the output is the
    list of (value, count) pairs, deduplicated at dedup_tol and sorted by
    (real, imag) for reproducibility.
    """
    vals: list[complex] = [lambda_chi(chi) for chi in admissible_characters(d)]
    groups: list[list[complex]] = []
    for v in vals:
        for g in groups:
            if abs(v - g[0]) < dedup_tol:
                g.append(v)
                break
        else:
            groups.append([v])
    out = [(sum(g) / len(g), len(g)) for g in groups]
    out.sort(key=lambda t: (t[0].real, t[0].imag))
    return out
