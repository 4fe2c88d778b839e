"""barnesg: asymptotics of the Barnes G-function with certified error bounds.

The library evaluates log G(z+1) three ways -- truncated asymptotic
expansion with certified remainder bounds, high-accuracy quadrature oracle,
and terminant-based exponentially improved expansion -- and exposes the
Stokes-multiplier smoothing profile across arg z = +-pi/2.
"""

from .bernoulli import (
    CONSTANTS,
    EULER_GAMMA,
    LOG_GLAISHER,
    BernoulliTable,
    Constants,
    barnes_series_coefficient,
    bernoulli_number,
    bernoulli_poly,
    series_coefficient,
    zeta_even,
)
from .errors import AccuracyError, DomainError, RangeError
from .expansion import (
    BoundKind,
    BoundReport,
    ExpansionResult,
    barnes_style_series,
    best_bound,
    bound_closed_form,
    bound_optimized,
    certified_eval,
    expansion_prefix,
    sector_factor,
    solve_optimal_angle,
    truncated_log_barnes,
)
from .oracle import (
    OracleValue,
    QuadraturePolicy,
    RemainderKernel,
    log_barnes_oracle,
    remainder_log_kernel,
    remainder_narrow,
    remainder_wide,
)
from .special import (
    LogGammaPolicy,
    c_of_phi,
    dilog,
    erf_small,
    exp_integral_e1,
    log_gamma,
)
from .terminant import (
    StokesSample,
    TerminantEval,
    TerminantMethod,
    TruncationScheme,
    exp_improved_log_barnes,
    exp_improved_report,
    stokes_profile,
    terminant,
    terminant_erf_approx,
)

__version__ = "0.1.0"

__all__ = [
    "AccuracyError",
    "BernoulliTable",
    "BoundKind",
    "BoundReport",
    "CONSTANTS",
    "Constants",
    "DomainError",
    "EULER_GAMMA",
    "ExpansionResult",
    "LOG_GLAISHER",
    "LogGammaPolicy",
    "OracleValue",
    "QuadraturePolicy",
    "RangeError",
    "RemainderKernel",
    "StokesSample",
    "TerminantEval",
    "TerminantMethod",
    "TruncationScheme",
    "barnes_series_coefficient",
    "barnes_style_series",
    "bernoulli_number",
    "bernoulli_poly",
    "best_bound",
    "bound_closed_form",
    "bound_optimized",
    "c_of_phi",
    "certified_eval",
    "dilog",
    "erf_small",
    "exp_improved_log_barnes",
    "exp_improved_report",
    "exp_integral_e1",
    "expansion_prefix",
    "log_barnes_oracle",
    "log_gamma",
    "remainder_log_kernel",
    "remainder_narrow",
    "remainder_wide",
    "sector_factor",
    "series_coefficient",
    "solve_optimal_angle",
    "stokes_profile",
    "terminant",
    "terminant_erf_approx",
    "truncated_log_barnes",
    "zeta_even",
]
