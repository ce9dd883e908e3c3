"""The Gaussian family f_{u,v}(k) = eta^{-u(k-v)^2} on Z/dZ, eta = -exp(i pi/d).

For odd d the twist eta is the exact root of unity zeta^{(d+1)/2} with
zeta = exp(2 i pi/d), so eta^d = 1 and every value of f_{u,v} is computed
from an integer exponent reduced mod d; no floating-point exponent drift.

Laws implemented here (u a unit mod d, (u/d) the Jacobi symbol, g_d the
classical Gauss sum, equal to sqrt(d) for d = 1 mod 4 and i sqrt(d) for
d = 3 mod 4):

  criticality      convolve(f, f)(2k) = lam * f(k)^2
                   with  lam = (u/d) * conj(g_d)
  transform image  conj_fourier(f_{u,v})
                   = (2u/d) * (g_d / sqrt(d)) * eta^{u v^2} * f_{u^{-1}, u v}

Both are exact identities (checked to round-off in the test suite).  Note
the conjugate on g_d in the critical value and its absence in the transform
scalar: for d = 1 mod 4 the two agree, for d = 3 mod 4 they differ by a
sign, and the identities above are the ones that hold.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import arith
from .errors import ContractViolation
from .group_core import GroupFunction, conj_fourier, fixed_point_rescale

__all__ = [
    "GaussianParams",
    "classical_gauss_sum",
    "gauss_sum_closed_form",
    "eta_power",
    "gaussian_function",
    "gaussian_critical_value",
    "gaussian_conj_fourier_factor",
    "gaussian_fixed_point_witness",
]


@dataclass(frozen=True)
class GaussianParams:
    modulus: int
    u: int
    v: int

    def __post_init__(self) -> None:
        d = arith.require_odd_modulus(self.modulus)
        u = int(self.u) % d
        if math.gcd(u, d) != 1:
            raise ContractViolation(f"u must be a unit mod {d}, got {self.u}")
        object.__setattr__(self, "modulus", d)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", int(self.v) % d)


def classical_gauss_sum(d: int) -> complex:
    """g_d = sum_k exp(2 i pi k^2 / d), by direct summation."""
    arith.require_odd_modulus(d)
    return sum(cmath.exp(2j * math.pi * (k * k % d) / d) for k in range(d))


def gauss_sum_closed_form(d: int) -> complex:
    """sqrt(d) for d = 1 mod 4, i sqrt(d) for d = 3 mod 4 (exact evaluation of g_d)."""
    arith.require_odd_modulus(d)
    return math.sqrt(d) if d % 4 == 1 else 1j * math.sqrt(d)


def eta_power(d: int, m: int) -> complex:
    """eta^m with eta = -exp(i pi / d) = zeta^{(d+1)/2}; exact integer reduction."""
    e = ((d + 1) // 2 * int(m)) % d
    return cmath.exp(2j * math.pi * e / d)


def gaussian_function(p: GaussianParams) -> GroupFunction:
    d, u, v = p.modulus, p.u, p.v
    vals = np.array([eta_power(d, -u * (k - v) * (k - v)) for k in range(d)])
    return GroupFunction(d, vals)


def gaussian_critical_value(p: GaussianParams) -> complex:
    """The lam with convolve(f, f)(2k) = lam f(k)^2: (u/d) * conj(g_d)."""
    return arith.jacobi_symbol(p.u, p.modulus) * np.conj(
        gauss_sum_closed_form(p.modulus)
    )


def gaussian_conj_fourier_factor(p: GaussianParams) -> tuple[GaussianParams, complex]:
    """Image parameters and scalar of the conjugate Fourier transform.

    conj_fourier(f_{u,v}) = scalar * f_{u', v'} with u' = u^{-1} mod d,
    v' = u v mod d, scalar = (2u/d) (g_d / sqrt d) eta^{u v^2}.
    """
    d, u, v = p.modulus, p.u, p.v
    image = GaussianParams(d, pow(u, -1, d), u * v % d)
    unit = 1.0 if d % 4 == 1 else 1j  # g_d / sqrt(d)
    scalar = arith.jacobi_symbol(2 * u, d) * unit * eta_power(d, u * v * v)
    return image, scalar


def gaussian_fixed_point_witness(
    d: int, branch: str
) -> tuple[complex, GroupFunction, int | None]:
    """A critical witness fixed by the conjugate Fourier transform, up to reindexing.

    branch="plus"  -> lam = g_d, witness with conj_fourier(f) = f (q None).
    branch="minus" -> lam = -g_d.  For d = 3 mod 4 the witness is again a
    plain fixed point.  For d = 1 mod 4 (lam = -sqrt d) no Gaussian fixed
    point exists; the witness satisfies conj_fourier(f)(k) = f(q k) for the
    returned unit q (the smaller of the two residues with q^2 = u^{-2},
    u the least unit of Jacobi symbol -1).  When d = 1 mod 4 is a perfect
    square every Jacobi symbol is +1, no Gaussian has critical value -g_d,
    and the minus branch raises.

    All witnesses are rescaled so the stated relation holds on the nose,
    not just up to a unimodular factor.
    """
    arith.require_odd_modulus(d)
    gd = gauss_sum_closed_form(d)
    if branch == "plus":
        u = 1 if d % 4 == 1 else d - 1
        lam = gd
        q = None
    elif branch == "minus":
        lam = -gd
        if d % 4 == 3:
            u = 1
            q = None
        else:
            try:
                u = arith.least_nonresidue(d)
            except ContractViolation:
                raise ContractViolation(
                    f"no Gaussian is ({-gd.real:g})-critical: every Jacobi "
                    f"symbol mod {d} is +1"
                ) from None
            uinv = pow(u, -1, d)
            q = min(uinv, d - uinv)
    else:
        raise ContractViolation(f"branch must be 'plus' or 'minus', got {branch!r}")

    params = GaussianParams(d, u, 0)
    image, alpha = gaussian_conj_fourier_factor(params)
    # v = 0: image parameters are (u^{-1}, 0); for u = +-1 that is (u, 0) itself
    f = fixed_point_rescale(gaussian_function(params), alpha)
    return lam, f, q
