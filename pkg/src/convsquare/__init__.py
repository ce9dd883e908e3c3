"""Critical functions of the convolution-square equation on Z/dZ.

A function f on Z/dZ (d odd) is lam-critical when (f*f)(2k) = lam f(k)^2
for every k, with * the unnormalized cyclic convolution.  The package
builds the known explicit witnesses (quadratic exponential functions,
Dirichlet characters with primitive square, theta-function samples),
verifies their transform symmetries, searches for new witnesses
numerically, and ships a catalog of known critical values for odd
moduli up to 17.
"""
from . import arith, catalog, characters, gaussians, group_core, solver, theta
from .catalog import (
    CriticalValueRecord,
    VerificationBudget,
    eval_exact,
    format_lambda,
    load_catalog,
    parse_lambda,
    theta_family_sweep,
    verify_record,
)
from .characters import (
    DirichletCharacter,
    admissible_characters,
    enumerate_characters,
    lambda_chi,
    lambda_chi_values,
)
from .errors import ContractViolation, DomainError, TruncationError
from .gaussians import (
    GaussianParams,
    gaussian_conj_fourier_factor,
    gaussian_critical_value,
    gaussian_fixed_point_witness,
    gaussian_function,
)
from .group_core import (
    GroupFunction,
    conj_fourier,
    convolve,
    criticality_residual,
    delta,
    fixed_point_rescale,
    fourier,
    ones,
    reindex,
    symmetry_class,
)
from .solver import (
    FAMILY_B10,
    FAMILY_B3A,
    FAMILY_B3B,
    FAMILY_C10,
    AlgebraicSpec,
    SearchConfig,
    SearchResult,
    family_fixed_point_probe,
    find_critical_functions,
    probe_fixed_point,
    probe_reindexed_fixed_point,
    weil_check,
)
from .theta import (
    ThetaCriticalParams,
    TruncationPolicy,
    admissible_pairs,
    make_params,
    theta_critical_function,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "arith", "catalog", "characters", "gaussians", "group_core", "solver",
    "theta",
    "ContractViolation", "DomainError", "TruncationError",
    "GroupFunction", "fourier", "conj_fourier", "convolve", "delta", "ones",
    "reindex", "criticality_residual", "symmetry_class", "fixed_point_rescale",
    "DirichletCharacter", "enumerate_characters", "admissible_characters",
    "lambda_chi", "lambda_chi_values",
    "GaussianParams", "gaussian_function", "gaussian_critical_value",
    "gaussian_conj_fourier_factor", "gaussian_fixed_point_witness",
    "ThetaCriticalParams", "TruncationPolicy", "make_params",
    "admissible_pairs", "theta_critical_function",
    "SearchConfig", "SearchResult", "find_critical_functions",
    "probe_fixed_point", "probe_reindexed_fixed_point", "AlgebraicSpec",
    "weil_check", "family_fixed_point_probe",
    "FAMILY_C10", "FAMILY_B3A", "FAMILY_B3B", "FAMILY_B10",
    "CriticalValueRecord", "VerificationBudget", "load_catalog",
    "verify_record", "theta_family_sweep", "parse_lambda", "format_lambda",
    "eval_exact",
]
