"""Jacobi theta series and the theta-sampled critical functions.

theta(z, tau) = sum_m exp(i pi m^2 tau + 2 i pi m z), Im(tau) > 0, together
with the even/odd-index variants theta_char0 / theta_char1 (series in
exp(i pi (tau/2) m^2 + 2 i pi m z) restricted by the parity of m).

For odd d and positive reals a + b = d set lam0 = sqrt(a) + i sqrt(b) and
tau0 = (lam0^2 - d^2) / (4 d^2).  Sampling theta along an arithmetic
progression gives the family

    f_z(l) = theta(lam0 z + (d+1)/(2d) * l, tau0),   l in Z/dZ,

which always satisfies the transform relation

    conj_fourier(f_zbar) = (lam0/sqrt d) exp(4 i pi d^2 z^2) f_z,

and is lam0-critical (convolve(f,f)(2k) = lam0 f(k)^2) exactly when a is an
integer with a = (d+1)^2/4 mod 4 (the "integral" flag).  The parity
variants and the squared function satisfy analogous relations with
exp(8 i pi d^2 z^2) and an index doubling; see the *_pair_residual helpers.

Numerical scale: the samples share Im(w) = Im(lam0 z), so one positive
factor exp(-K) tames the whole row.  Functions returning rows give literal
theta values whenever the row peak stays below exp(300); larger rows come
back rescaled by exp(-log_scale) with log_scale reported where the API
allows.  A positive rescale preserves criticality (with the same lambda)
and every eigen relation used here, so all residual helpers are safe in
both regimes.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import arith
from .errors import ContractViolation, DomainError, TruncationError
from .group_core import GroupFunction, conj_fourier

__all__ = [
    "TruncationPolicy",
    "SL2Matrix",
    "ThetaCriticalParams",
    "theta",
    "theta_char0",
    "theta_char1",
    "make_params",
    "admissible_pairs",
    "integral_pairs_for",
    "theta_critical_function",
    "theta_witness",
    "theta_char_functions",
    "theta_char_witness",
    "critical_pair_residual",
    "eigen_factor_at_real",
    "eigen_residual_at_real",
    "char_pair_residual",
    "square_pair_residual",
    "decomposition_residual",
    "finite_fourier_residual",
    "reflection_residual",
    "hecke_transform_check",
    "theta_constant_reality_check",
    "lambda_chain_residual",
    "sigma0",
    "sigma1",
    "default_tolerance",
]

# rows with log-peak above this come back rescaled; below it, literal values
# (squaring a literal row must stay inside binary64, hence 300 not 709)
_LITERAL_CUTOFF = 300.0


@dataclass(frozen=True)
class TruncationPolicy:
    """Series truncation: tail below tolerance, hard cap on summed terms."""

    tolerance: float = 1e-12
    max_terms: int = 1_000_000

    def __post_init__(self) -> None:
        if not (0 < self.tolerance < 1):
            raise ContractViolation(f"tolerance must be in (0,1), got {self.tolerance}")
        if self.max_terms < 17:
            raise ContractViolation(f"max_terms too small: {self.max_terms}")


_DEFAULT_POLICY = TruncationPolicy()


@dataclass(frozen=True)
class SL2Matrix:
    """Integer matrix ((alpha, beta), (gamma, delta)) with determinant 1."""

    alpha: int
    beta: int
    gamma: int
    delta: int

    def __post_init__(self) -> None:
        if self.alpha * self.delta - self.beta * self.gamma != 1:
            raise ContractViolation("determinant must be 1")

    def apply(self, tau: complex) -> complex:
        return (self.alpha * tau + self.beta) / (self.gamma * tau + self.delta)


@dataclass(frozen=True)
class ThetaCriticalParams:
    """d odd, a + b = d, lam0 = sqrt(a)+i sqrt(b), tau0 = (lam0^2-d^2)/(4d^2).

    integral is True when a is an integer congruent to (d+1)^2/4 mod 4; only
    then is the sampled family guaranteed critical (the transform relations
    hold regardless).  Build through make_params.
    """

    modulus: int
    a: float
    b: float
    lam0: complex
    tau0: complex
    integral: bool


def make_params(d: int, a: float, b: float) -> ThetaCriticalParams:
    d = arith.require_odd_modulus(d)
    a = float(a)
    b = float(b)
    if a <= 0 or b <= 0:
        raise ContractViolation(f"need a, b > 0, got a={a}, b={b}")
    if abs(a + b - d) > 1e-12:
        raise ContractViolation(f"need a + b = d, got {a} + {b} != {d}")
    lam0 = math.sqrt(a) + 1j * math.sqrt(b)
    tau0 = (lam0 * lam0 - d * d) / (4 * d * d)
    integral = (
        a.is_integer()
        and b.is_integer()
        and (int(a) - (d + 1) ** 2 // 4) % 4 == 0
    )
    return ThetaCriticalParams(d, a, b, lam0, tau0, integral)


def admissible_pairs(d_max: int) -> list[tuple[int, int, int]]:
    """All (d, a, b) with odd 3 <= d <= d_max passing the integrality test."""
    out = []
    for d in range(3, d_max + 1, 2):
        r = ((d + 1) ** 2 // 4) % 4
        for a in range(1, d):
            if a % 4 == r:
                out.append((d, a, d - a))
    return out


def integral_pairs_for(d: int) -> list[tuple[int, int]]:
    arith.require_odd_modulus(d)
    return [(a, b) for (dd, a, b) in admissible_pairs(d) if dd == d]


# ---------------------------------------------------------------- series

def _half_width(t_coeff: float, y: float, policy: TruncationPolicy) -> int:
    """Smallest M with pi*t*M^2 - 2*pi*M*|y| >= ln(4/eps), plus a ratio guard."""
    c = math.log(4.0 / policy.tolerance)
    y = abs(y)
    disc = math.pi * math.pi * y * y + math.pi * t_coeff * c
    m = (math.pi * y + math.sqrt(disc)) / (math.pi * t_coeff)
    M = max(8, math.ceil(m) + 1)
    # geometric domination: successive-term ratio at the boundary <= 1/2
    while math.exp(-math.pi * t_coeff * (2 * M + 1) + 2 * math.pi * y) > 0.5:
        M += 1
    if 2 * M + 1 > policy.max_terms:
        raise TruncationError(
            f"series needs {2 * M + 1} terms (Im tau={t_coeff:g}, |Im w|={y:g}), "
            f"cap is {policy.max_terms}"
        )
    return M


def _theta_sum(
    z: complex, tau_coeff: complex, parity: int | None, policy: TruncationPolicy
) -> complex:
    t = tau_coeff.imag
    if t <= 0:
        raise DomainError(f"need Im(tau) > 0, got {t}")
    z = complex(z)
    # exact 1-periodicity: shift off the integer part of Re(z)
    zr = z - math.floor(z.real)
    M = _half_width(t, zr.imag, policy)
    m = np.arange(-M, M + 1)
    if parity is not None:
        m = m[m % 2 == parity]
    mf = m.astype(float)
    expo = 1j * math.pi * tau_coeff * mf * mf + 2j * math.pi * m * zr
    return complex(np.exp(expo).sum())


def theta(z: complex, tau: complex, policy: TruncationPolicy | None = None) -> complex:
    """sum_m exp(i pi m^2 tau + 2 i pi m z); 1-periodic and even in z."""
    return _theta_sum(z, tau, None, policy or _DEFAULT_POLICY)


def theta_char0(z: complex, tau: complex, policy: TruncationPolicy | None = None) -> complex:
    """Even-index part: sum over even m of exp(i pi (tau/2) m^2 + 2 i pi m z)."""
    return _theta_sum(z, tau / 2, 0, policy or _DEFAULT_POLICY)


def theta_char1(z: complex, tau: complex, policy: TruncationPolicy | None = None) -> complex:
    """Odd-index part; equals exp(i pi tau/2 + 2 i pi z) theta_char0(z + tau/2, tau)."""
    return _theta_sum(z, tau / 2, 1, policy or _DEFAULT_POLICY)


# ---------------------------------------------------- sampled witnesses

def _scaled_row(
    p: ThetaCriticalParams,
    z: complex,
    parity: int | None,
    policy: TruncationPolicy,
) -> tuple[np.ndarray, float]:
    """Row of d samples times exp(-K), and K >= 0 (log of the tamed peak).

    All samples w_l = lam0 z + (d+1) l / (2d) share Im(w), so one K (the
    peak log-magnitude of the series terms over the summation grid) is
    valid for the whole row.
    """
    d = p.modulus
    tc = p.tau0 if parity is None else p.tau0 / 2
    z = complex(z)
    y = (p.lam0 * z).imag
    M = _half_width(tc.imag, y, policy)
    m = np.arange(-M, M + 1)
    if parity is not None:
        m = m[m % 2 == parity]
    mf = m.astype(float)
    K = float(np.max(-math.pi * tc.imag * mf * mf + 2 * math.pi * mf * y))
    K = max(K, 0.0)
    row = np.empty(d, complex)
    for l in range(d):
        w = p.lam0 * z + (d + 1) * l / (2 * d)
        w = w - math.floor(w.real)
        expo = 1j * math.pi * tc * mf * mf + 2j * math.pi * m * w - K
        row[l] = np.exp(expo).sum()
    return row, K


def theta_witness(
    p: ThetaCriticalParams, z: complex, policy: TruncationPolicy | None = None
) -> tuple[GroupFunction, float]:
    """(f, log_scale) with true samples f * exp(log_scale).

    log_scale is 0.0 (literal values) whenever the row peak allows it.
    """
    row, K = _scaled_row(p, z, None, policy or _DEFAULT_POLICY)
    if K <= _LITERAL_CUTOFF:
        return GroupFunction(p.modulus, row * math.exp(K)), 0.0
    return GroupFunction(p.modulus, row), K


def theta_critical_function(
    p: ThetaCriticalParams, z: complex, policy: TruncationPolicy | None = None
) -> GroupFunction:
    """f_z(l) = theta(lam0 z + (d+1)/(2d) l, tau0), up to the documented rescale.

    With the integral flag, criticality_residual(f_z, lam0) vanishes to
    truncation accuracy for every complex z; without it only the z/zbar
    transform relation (critical_pair_residual) is guaranteed.
    """
    return theta_witness(p, z, policy)[0]


def theta_char_witness(
    p: ThetaCriticalParams, z: complex, policy: TruncationPolicy | None = None
) -> tuple[GroupFunction, GroupFunction, GroupFunction, float]:
    """(f0, f1, F, log_scale) on one shared scale; F = f_z^2 on that scale."""
    policy = policy or _DEFAULT_POLICY
    row0, k0 = _scaled_row(p, z, 0, policy)
    row1, k1 = _scaled_row(p, z, 1, policy)
    rowf, kf = _scaled_row(p, z, None, policy)
    K = max(k0, k1, 2 * kf)
    d = p.modulus
    if K <= _LITERAL_CUTOFF:
        frow = rowf * math.exp(kf)
        return (
            GroupFunction(d, row0 * math.exp(k0)),
            GroupFunction(d, row1 * math.exp(k1)),
            GroupFunction(d, frow * frow),
            0.0,
        )
    return (
        GroupFunction(d, row0 * math.exp(k0 - K)),
        GroupFunction(d, row1 * math.exp(k1 - K)),
        GroupFunction(d, rowf * rowf * math.exp(2 * kf - K)),
        K,
    )


def theta_char_functions(
    p: ThetaCriticalParams, z: complex, policy: TruncationPolicy | None = None
) -> tuple[GroupFunction, GroupFunction, GroupFunction]:
    """Parity components f0_z, f1_z and the square F = f_z^2, common scale."""
    f0, f1, ff, _ = theta_char_witness(p, z, policy)
    return f0, f1, ff


def _rel(lhs: np.ndarray, rhs: np.ndarray) -> float:
    num = float(np.max(np.abs(lhs - rhs)))
    den = max(1.0, float(np.max(np.abs(lhs))), float(np.max(np.abs(rhs))))
    return num / den


def critical_pair_residual(
    p: ThetaCriticalParams, z: complex, policy: TruncationPolicy | None = None
) -> float:
    """Relative residual of conj_fourier(f_zbar) = (lam0/sqrt d) e^{4 i pi d^2 z^2} f_z.

    Holds for every a, b > 0 with a + b = d, integral or not.
    """
    policy = policy or _DEFAULT_POLICY
    z = complex(z)
    rowz, kz = _scaled_row(p, z, None, policy)
    rowzb, kzb = _scaled_row(p, z.conjugate(), None, policy)
    d = p.modulus
    factor = (p.lam0 / math.sqrt(d)) * cmath.exp(
        4j * math.pi * d * d * z * z + (kz - kzb)
    )
    lhs = conj_fourier(GroupFunction(d, rowzb)).values
    return _rel(lhs, factor * rowz)


def eigen_factor_at_real(p: ThetaCriticalParams, r: float) -> complex:
    """alpha with conj_fourier(f_r) = alpha f_r at real r; |alpha| = 1."""
    d = p.modulus
    return (p.lam0 / math.sqrt(d)) * cmath.exp(4j * math.pi * d * d * r * r)


def eigen_residual_at_real(
    p: ThetaCriticalParams, r: float, policy: TruncationPolicy | None = None
) -> float:
    """Relative residual of conj_fourier(f_r) = alpha f_r for real r."""
    if abs(complex(r).imag) > 0:
        raise ContractViolation(f"r must be real, got {r}")
    row, _ = _scaled_row(p, float(r), None, policy or _DEFAULT_POLICY)
    d = p.modulus
    g = conj_fourier(GroupFunction(d, row)).values
    return _rel(g, eigen_factor_at_real(p, float(r)) * row)


def char_pair_residual(
    p: ThetaCriticalParams,
    z: complex,
    parity: int,
    policy: TruncationPolicy | None = None,
) -> float:
    """Relative residual of the parity-component transform relation.

    sign * conj_fourier(fj_zbar)(2k) = (lam0/sqrt d) e^{8 i pi d^2 z^2} fj_z(k),
    with sign = 1 for parity 0 and (-1)^{(d^2-1)/8} for parity 1.
    """
    if parity not in (0, 1):
        raise ContractViolation(f"parity must be 0 or 1, got {parity}")
    policy = policy or _DEFAULT_POLICY
    z = complex(z)
    rowz, kz = _scaled_row(p, z, parity, policy)
    rowzb, kzb = _scaled_row(p, z.conjugate(), parity, policy)
    d = p.modulus
    sign = 1.0 if parity == 0 else float((-1) ** ((d * d - 1) // 8))
    factor = (p.lam0 / math.sqrt(d)) * cmath.exp(
        8j * math.pi * d * d * z * z + (kz - kzb)
    )
    g = conj_fourier(GroupFunction(d, rowzb)).values
    lhs = sign * g[(2 * np.arange(d)) % d]
    return _rel(lhs, factor * rowz)


def square_pair_residual(
    p: ThetaCriticalParams, z: complex, policy: TruncationPolicy | None = None
) -> float:
    """Relative residual of the squared-witness transform relation.

    conj_fourier(F_zbar)(2k) = (lam0^3 / (d sqrt d)) e^{8 i pi d^2 z^2} F_z(k),
    F_z = f_z^2.  Requires the integral flag.
    """
    if not p.integral:
        raise ContractViolation("square relation needs the integral flag")
    policy = policy or _DEFAULT_POLICY
    z = complex(z)
    rowz, kz = _scaled_row(p, z, None, policy)
    rowzb, kzb = _scaled_row(p, z.conjugate(), None, policy)
    d = p.modulus
    factor = (p.lam0 ** 3 / (d * math.sqrt(d))) * cmath.exp(
        8j * math.pi * d * d * z * z + 2 * (kz - kzb)
    )
    g = conj_fourier(GroupFunction(d, rowzb * rowzb)).values
    lhs = g[(2 * np.arange(d)) % d]
    return _rel(lhs, factor * rowz * rowz)


def decomposition_residual(
    p: ThetaCriticalParams, z: complex, policy: TruncationPolicy | None = None
) -> float:
    """Relative residual of F_z = theta_char0(0,tau0) f0_z + theta_char1(0,tau0) f1_z."""
    policy = policy or _DEFAULT_POLICY
    f0, f1, ff, _ = theta_char_witness(p, z, policy)
    c0 = theta_char0(0, p.tau0, policy)
    c1 = theta_char1(0, p.tau0, policy)
    return _rel(ff.values, c0 * f0.values + c1 * f1.values)


def finite_fourier_residual(
    d: int,
    w: complex,
    tau: complex,
    policy: TruncationPolicy | None = None,
    parity: int | None = None,
) -> float:
    """Discrete Fourier sum of theta along w + l/d against its closed form.

    parity None:
      sum_l e^{-2 i pi k l / d} theta(w + l/d, tau)
        = d e^{i pi k^2 tau} e^{2 i pi k w} theta(dw + dk tau, d^2 tau)
    parity j in {0, 1}: same shape with e^{-4 i pi k l / d}, doubled phases,
    and theta_char_j on both sides.  Returns the worst relative residual
    over a balanced set of k representatives.
    """
    policy = policy or _DEFAULT_POLICY
    d = arith.require_odd_modulus(d)
    if parity is None:
        ev = lambda zz, tt: theta(zz, tt, policy)
        twist, kk_coeff, w_coeff = 2.0, 1.0, 2.0
    else:
        if parity not in (0, 1):
            raise ContractViolation(f"parity must be None, 0 or 1, got {parity}")
        ev = (lambda zz, tt: theta_char0(zz, tt, policy)) if parity == 0 else (
            lambda zz, tt: theta_char1(zz, tt, policy)
        )
        twist, kk_coeff, w_coeff = 4.0, 2.0, 4.0
    worst = 0.0
    for k in range(-(d - 1) // 2, (d - 1) // 2 + 1):
        lhs = sum(
            cmath.exp(-1j * twist * math.pi * k * l / d) * ev(w + l / d, tau)
            for l in range(d)
        )
        rhs = (
            d
            * cmath.exp(1j * kk_coeff * math.pi * k * k * tau)
            * cmath.exp(1j * w_coeff * math.pi * k * w)
            * ev(d * w + d * k * tau, d * d * tau)
        )
        worst = max(worst, abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs)))
    return worst


def reflection_residual(
    p: ThetaCriticalParams,
    z: complex,
    component: str = "full",
    policy: TruncationPolicy | None = None,
) -> float:
    """Relative residual of the tau0 -> -d^2 conj(tau0) reflection identity.

    component "full":  theta(d conj(lam0) z, -d^2 conj(tau0))
                        = (lam0/d) e^{4 i pi d^2 z^2} theta(lam0 z, tau0)
    component "char0"/"char1": parity variants with e^{8 i pi d^2 z^2}, the
    char1 left side carrying the sign (-1)^{(d^2-1)/8}.
    """
    policy = policy or _DEFAULT_POLICY
    d = p.modulus
    z = complex(z)
    mirrored = -d * d * p.tau0.conjugate()
    warg = d * p.lam0.conjugate() * z
    if component == "full":
        lhs = theta(warg, mirrored, policy)
        rhs = (p.lam0 / d) * cmath.exp(4j * math.pi * d * d * z * z) * theta(
            p.lam0 * z, p.tau0, policy
        )
    elif component in ("char0", "char1"):
        j = 0 if component == "char0" else 1
        ev = theta_char0 if j == 0 else theta_char1
        sign = 1.0 if j == 0 else float((-1) ** ((d * d - 1) // 8))
        lhs = sign * ev(warg, mirrored, policy)
        rhs = (p.lam0 / d) * cmath.exp(8j * math.pi * d * d * z * z) * ev(
            p.lam0 * z, p.tau0, policy
        )
    else:
        raise ContractViolation(f"component must be full/char0/char1, got {component!r}")
    return abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs))


def hecke_transform_check(
    sigma: SL2Matrix, w: complex, tau: complex, policy: TruncationPolicy | None = None
) -> float:
    """Residual of the weight-1/2 transformation law for theta.

    theta(w/(gamma tau + delta), sigma.tau)
      = i^{(delta-1)/2} (gamma/delta) (gamma tau + delta)^{1/2}
        e^{i pi gamma w^2 / (gamma tau + delta)} theta(w, tau)

    with (gamma/delta) the Jacobi symbol and the square root taken with
    positive real part.  Requires alpha, delta odd, beta, gamma even,
    gamma > 0, delta > 0.
    """
    policy = policy or _DEFAULT_POLICY
    if sigma.alpha % 2 == 0 or sigma.delta % 2 == 0:
        raise ContractViolation("alpha and delta must be odd")
    if sigma.beta % 2 or sigma.gamma % 2:
        raise ContractViolation("beta and gamma must be even")
    if sigma.gamma <= 0 or sigma.delta <= 0:
        raise ContractViolation("need gamma > 0 and delta > 0")
    if complex(tau).imag <= 0:
        raise DomainError(f"need Im(tau) > 0, got {complex(tau).imag}")
    den = sigma.gamma * tau + sigma.delta
    root = cmath.sqrt(den)
    if root.real < 0:
        root = -root
    rhs = (
        (1, 1j, -1, -1j)[((sigma.delta - 1) // 2) % 4]
        * arith.jacobi_symbol(sigma.gamma, sigma.delta)
        * root
        * cmath.exp(1j * math.pi * sigma.gamma * w * w / den)
        * theta(w, tau, policy)
    )
    lhs = theta(w / den, sigma.apply(tau), policy)
    return abs(lhs - rhs)


def sigma0(d: int) -> SL2Matrix:
    """((d^2, (d^2-1)/4), (4, 1)); maps tau0 to -d^2 conj(tau0)."""
    arith.require_odd_modulus(d)
    return SL2Matrix(d * d, (d * d - 1) // 4, 4, 1)


def sigma1(d: int) -> SL2Matrix:
    """((d^2, (d^2-1)/2), (2, 1)); maps 2 tau0 to -d^2 conj(2 tau0)."""
    arith.require_odd_modulus(d)
    return SL2Matrix(d * d, (d * d - 1) // 2, 2, 1)


def theta_constant_reality_check(
    p: ThetaCriticalParams,
    policy: TruncationPolicy | None = None,
    tol: float = 1e-9,
) -> dict:
    """Reality pattern of the theta constants at tau0 (integral flag required).

    lam0 * theta_char0(0, tau0) is always real; lam0 * theta_char1(0, tau0)
    is real when d = +-1 mod 8 and purely imaginary otherwise.  Also checks
    the integer congruence (a - b - d^2)/2 in (d^2-1)/4 + 4Z.
    """
    if not p.integral:
        raise ContractViolation("reality pattern needs the integral flag")
    policy = policy or _DEFAULT_POLICY
    d = p.modulus
    v0 = p.lam0 * theta_char0(0, p.tau0, policy)
    v1 = p.lam0 * theta_char1(0, p.tau0, policy)
    expect_real = d % 8 in (1, 7)
    off0 = abs(v0.imag)
    off1 = abs(v1.imag) if expect_real else abs(v1.real)
    half = (int(p.a) - int(p.b) - d * d) // 2
    congruent = (int(p.a) - int(p.b) - d * d) % 2 == 0 and (
        half - (d * d - 1) // 4
    ) % 4 == 0
    return {
        "lam0_theta0": v0,
        "lam0_theta1": v1,
        "theta0_imag_part": off0,
        "theta1_expected": "real" if expect_real else "imaginary",
        "theta1_off_part": off1,
        "congruence_ok": congruent,
        "passed": off0 <= tol and off1 <= tol and congruent,
    }


def lambda_chain_residual(
    p: ThetaCriticalParams, r: float, policy: TruncationPolicy | None = None
) -> float:
    """|beta sqrt(d)/alpha^2 - lam0| for the real-r eigen and square factors.

    alpha = (lam0/sqrt d) e^{4 i pi d^2 r^2} is the conj-Fourier factor of
    f_r and beta = (lam0^3/(d sqrt d)) e^{8 i pi d^2 r^2} the factor of
    F_r; the chain pins the critical value of f_r back to lam0.
    """
    d = p.modulus
    r = float(r)
    al = (p.lam0 / math.sqrt(d)) * cmath.exp(4j * math.pi * d * d * r * r)
    be = (p.lam0 ** 3 / (d * math.sqrt(d))) * cmath.exp(8j * math.pi * d * d * r * r)
    return abs(be * math.sqrt(d) / (al * al) - p.lam0)


def default_tolerance(d: int, policy: TruncationPolicy | None = None) -> float:
    """max(1e-8, eps * d^2 * 1e3): residual allowance for theta-derived rows."""
    eps = (policy or _DEFAULT_POLICY).tolerance
    return max(1e-8, eps * d * d * 1e3)
