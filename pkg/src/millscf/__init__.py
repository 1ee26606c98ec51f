"""Gaussian and Gamma Mills ratios via modified continued fractions."""

from .cf import (
    CFEvaluationError,
    CFSpec,
    ConvergentState,
    InvalidTransformError,
    continuant_oracle,
    convergents,
    equivalence_transform,
    eval_backward,
    eval_doubly_modified,
    forward_recurrence,
)
from .tails import FAMILIES, beta0, custom, get_family, mod_constants
from .gauss import (
    asymptotic_series,
    decays_beyond,
    delta,
    error_integrand,
    hazard,
    mills,
    mills_derivatives,
    pade_r2,
    phi,
    scan_max_delta,
    second_error_integrand,
    sign_operator,
    taylor_mills,
    truncation_bound,
)
from .gamma import (
    ConvergenceError,
    GammaParams,
    bounds_s01,
    cf_l1,
    laguerre,
    lower_cf,
    reduce_s,
    winitzki_cf,
)
from .reference import (
    OracleError,
    reference_gamma_mills,
    reference_mills,
    reference_tail,
)
from .verify import run_suites

__version__ = "0.1.0"

__all__ = [
    "CFEvaluationError",
    "CFSpec",
    "ConvergenceError",
    "ConvergentState",
    "FAMILIES",
    "GammaParams",
    "InvalidTransformError",
    "OracleError",
    "asymptotic_series",
    "beta0",
    "bounds_s01",
    "cf_l1",
    "continuant_oracle",
    "convergents",
    "custom",
    "decays_beyond",
    "delta",
    "equivalence_transform",
    "error_integrand",
    "eval_backward",
    "eval_doubly_modified",
    "forward_recurrence",
    "get_family",
    "hazard",
    "laguerre",
    "lower_cf",
    "mills",
    "mills_derivatives",
    "mod_constants",
    "pade_r2",
    "phi",
    "reduce_s",
    "reference_gamma_mills",
    "reference_mills",
    "reference_tail",
    "run_suites",
    "scan_max_delta",
    "second_error_integrand",
    "sign_operator",
    "taylor_mills",
    "truncation_bound",
    "winitzki_cf",
]
