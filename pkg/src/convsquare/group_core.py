"""Functions on Z/dZ: convolution, Fourier transforms, criticality residual.

Conventions (fixed once, used everywhere):

  convolve(f, g)(t)  = sum_l f(l) g(t-l)                       (unnormalized)
  fourier(f)(k)      = d^(-1/2) sum_l exp(-2 i pi k l / d) f(l)  (unitary)
  conj_fourier(f)(k) = d^(-1/2) sum_l exp(+2 i pi k l / d) conj(f(l))

With these, fourier(f*g pointwise) = d^(-1/2) convolve(fourier f, fourier g)
holds exactly, and conj_fourier is an antilinear involution.  A function f is
lambda-critical when convolve(f, f)(2k) = lambda * f(k)^2 for every k.

All transforms are direct O(d^2) sums; d stays small and the exact
normalization matters more than speed.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .errors import ContractViolation

__all__ = [
    "GroupFunction",
    "Pairing",
    "convolve",
    "pointwise_mul",
    "fourier",
    "conj_fourier",
    "conj_fourier_paired",
    "reindex",
    "criticality_residual",
    "relative_criticality_residual",
    "symmetry_class",
    "fixed_point_rescale",
    "delta",
    "ones",
    "from_values",
]


@dataclass(frozen=True)
class GroupFunction:
    """A complex-valued function on Z/dZ, stored at representatives 0..d-1."""

    modulus: int
    values: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        d = int(self.modulus)
        if d < 3 or d % 2 == 0:
            raise ContractViolation(f"modulus must be odd and >= 3, got {d}")
        vals = np.asarray(self.values, dtype=complex)
        if vals.shape != (d,):
            raise ContractViolation(
                f"expected {d} values, got array of shape {vals.shape}"
            )
        vals = vals.copy()
        vals.flags.writeable = False
        object.__setattr__(self, "modulus", d)
        object.__setattr__(self, "values", vals)

    def __call__(self, k: int) -> complex:
        return complex(self.values[int(k) % self.modulus])

    def __len__(self) -> int:
        return self.modulus

    # scalar algebra, enough to write residual checks naturally
    def __mul__(self, c: complex) -> "GroupFunction":
        return GroupFunction(self.modulus, self.values * c)

    __rmul__ = __mul__

    def __add__(self, other: "GroupFunction") -> "GroupFunction":
        _same_modulus(self, other)
        return GroupFunction(self.modulus, self.values + other.values)

    def __sub__(self, other: "GroupFunction") -> "GroupFunction":
        _same_modulus(self, other)
        return GroupFunction(self.modulus, self.values - other.values)

    def conj(self) -> "GroupFunction":
        """Pointwise complex conjugate (not the conjugate Fourier transform)."""
        return GroupFunction(self.modulus, np.conj(self.values))

    def sup_norm(self) -> float:
        return float(np.max(np.abs(self.values)))

    def l2_norm(self) -> float:
        return float(np.linalg.norm(self.values))

    def sup_distance(self, other: "GroupFunction") -> float:
        _same_modulus(self, other)
        return float(np.max(np.abs(self.values - other.values)))


@dataclass(frozen=True)
class Pairing:
    """The symmetric nondegenerate pairing (x, y) -> exp(2 i pi q x y / d)."""

    modulus: int
    multiplier: int

    def __post_init__(self) -> None:
        d = int(self.modulus)
        q = int(self.multiplier)
        if d < 3 or d % 2 == 0:
            raise ContractViolation(f"modulus must be odd and >= 3, got {d}")
        if not (1 <= q < d) or math.gcd(q, d) != 1:
            raise ContractViolation(f"pairing multiplier {q} is not a unit mod {d}")
        object.__setattr__(self, "modulus", d)
        object.__setattr__(self, "multiplier", q)


def from_values(values: Iterable[complex]) -> GroupFunction:
    vals = np.asarray(list(values), dtype=complex)
    return GroupFunction(len(vals), vals)


def delta(d: int, at: int = 0) -> GroupFunction:
    v = np.zeros(d, dtype=complex)
    v[at % d] = 1.0
    return GroupFunction(d, v)


def ones(d: int) -> GroupFunction:
    return GroupFunction(d, np.ones(d, dtype=complex))


def _same_modulus(f: GroupFunction, g: GroupFunction) -> int:
    if f.modulus != g.modulus:
        raise ContractViolation(
            f"modulus mismatch: {f.modulus} vs {g.modulus}"
        )
    return f.modulus


def convolve(f: GroupFunction, g: GroupFunction) -> GroupFunction:
    d = _same_modulus(f, g)
    idx = np.arange(d)
    out = np.array([np.dot(f.values, g.values[(t - idx) % d]) for t in range(d)])
    return GroupFunction(d, out)


def pointwise_mul(f: GroupFunction, g: GroupFunction) -> GroupFunction:
    d = _same_modulus(f, g)
    return GroupFunction(d, f.values * g.values)


def _kernel(d: int, sign: int) -> np.ndarray:
    k = np.arange(d)
    return np.exp(sign * 2j * np.pi * np.outer(k, k) / d) / math.sqrt(d)


def fourier(f: GroupFunction) -> GroupFunction:
    return GroupFunction(f.modulus, _kernel(f.modulus, -1) @ f.values)


def conj_fourier(f: GroupFunction) -> GroupFunction:
    return GroupFunction(f.modulus, _kernel(f.modulus, +1) @ np.conj(f.values))


def conj_fourier_paired(f: GroupFunction, p: Pairing) -> GroupFunction:
    if p.modulus != f.modulus:
        raise ContractViolation(
            f"pairing modulus {p.modulus} does not match function modulus {f.modulus}"
        )
    d = f.modulus
    x = np.arange(d)
    W = np.exp(2j * np.pi * p.multiplier * np.outer(x, x) / d) / math.sqrt(d)
    return GroupFunction(d, W @ np.conj(f.values))


def reindex(f: GroupFunction, q: int) -> GroupFunction:
    """The function k -> f(q k); q must be invertible mod d."""
    d = f.modulus
    q = int(q) % d
    if math.gcd(q, d) != 1:
        raise ContractViolation(f"reindex needs a unit, got {q} mod {d}")
    return GroupFunction(d, f.values[(q * np.arange(d)) % d])


def criticality_residual(f: GroupFunction, lam: complex) -> float:
    """max_k | (f*f)(2k) - lam f(k)^2 |, zero (up to round-off) iff f is lam-critical."""
    d = f.modulus
    c = convolve(f, f).values
    k = np.arange(d)
    return float(np.max(np.abs(c[(2 * k) % d] - lam * f.values[k] ** 2)))


def relative_criticality_residual(f: GroupFunction, lam: complex) -> float:
    """Criticality residual divided by max(1, sup|f|^2).

    Both sides of the critical equation are quadratic in f, so any rescaling
    of f moves them together; this form is the meaningful one for witnesses
    whose natural magnitude is far from 1.
    """
    return criticality_residual(f, lam) / max(1.0, f.sup_norm() ** 2)


def symmetry_class(f: GroupFunction, tol: float = 1e-9) -> str:
    """'symmetric' if f(-k)=f(k), 'antisymmetric' if f(-k)=-f(k), else 'neither'."""
    if tol < 0:
        raise ContractViolation("tolerance must be nonnegative")
    d = f.modulus
    rev = f.values[(-np.arange(d)) % d]
    if float(np.max(np.abs(f.values - rev))) <= tol:
        return "symmetric"
    if float(np.max(np.abs(f.values + rev))) <= tol:
        return "antisymmetric"
    return "neither"


def fixed_point_rescale(f: GroupFunction, alpha: complex) -> GroupFunction:
    """Turn an eigenvector into a fixed point of the conjugate Fourier transform.

    If conj_fourier(f) = alpha * reindex(f, q) with |alpha| = 1, then
    g = sqrt(alpha) * f (principal branch) satisfies conj_fourier(g) =
    reindex(g, q): the transform is antilinear, so the rescaling picks up
    conj(beta) * alpha = beta exactly when beta^2 = alpha.
    """
    a = complex(alpha)
    if abs(abs(a) - 1.0) > 1e-6:
        raise ContractViolation(f"rescaling factor must be unimodular, |alpha|={abs(a)}")
    return cmath.sqrt(a) * f
