"""Riemann zeta via a contour integral on a vertical line in the critical strip.

The central object is the entire function E(s) = (s - 1) zeta(s), computed as

    E(s) = (1 / 2 pi) Integral over Re z = sigma of pi^2 z^{1-s} / sin^2(pi z)

with 0 < sigma < 1.  Everything else is built around that representation:
an imaginary-axis variant for Re s <= -0.05, residue partial sums that
recover the Dirichlet series, the functional equation zeta(s) =
chi(s) zeta(1-s) in two multiplier forms, a chain of Mellin integrals
equal to Gamma(s) zeta(s), and an independent Euler-Maclaurin evaluator
used as a cross-check.  The supported box is |Im s| <= 60.

Quick start::

    from zetaline import zeta
    print(zeta(2.0 + 0.0j).value)   # pi^2/6

Command line: ``python -m zetaline eval --re 2``.
"""

from .complex_core import (
    cos_pi_z,
    cpow_principal,
    csch_sq_half,
    gamma,
    log_gamma,
    sech_sq_pi,
    sin_pi_z,
    sinhc_half,
)
from .contour import (
    DEFAULT_CONTOUR,
    ContourSpec,
    EvalResult,
    entire_e_axis,
    entire_e_line,
    line_integrand,
    residue_at,
    residue_partial_sum,
    zeta,
)
from .errors import (
    ContractViolation,
    DomainError,
    IndeterminatePoint,
    NonFiniteIntegrand,
    PoleAtOne,
    PoleError,
    RemovableSingularity,
    TruncationFailure,
    ZetalineError,
)
from .functional_equation import FeqReport, chi, feq_check, feq_rhs, select_form
from .mellin import (
    MellinReport,
    bose_integral,
    exp_sq_integral,
    mellin_check,
    sinh_integral,
)
from .oracle import (
    EulerMaclaurinParams,
    bernoulli_even,
    default_params,
    dirichlet_partial,
    zeta_euler_maclaurin,
)
from .quadrature import (
    DEFAULT_PLAN,
    QuadraturePlan,
    QuadratureResult,
    gauss_legendre_rule,
    integrate_interval,
    integrate_line_decaying,
    integrate_mellin,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "ZetalineError",
    "DomainError",
    "ContractViolation",
    "PoleError",
    "PoleAtOne",
    "RemovableSingularity",
    "IndeterminatePoint",
    "NonFiniteIntegrand",
    "TruncationFailure",
    # complex helpers
    "cpow_principal",
    "sin_pi_z",
    "cos_pi_z",
    "sech_sq_pi",
    "csch_sq_half",
    "sinhc_half",
    "log_gamma",
    "gamma",
    # quadrature
    "QuadraturePlan",
    "QuadratureResult",
    "DEFAULT_PLAN",
    "gauss_legendre_rule",
    "integrate_interval",
    "integrate_line_decaying",
    "integrate_mellin",
    # contour
    "ContourSpec",
    "EvalResult",
    "DEFAULT_CONTOUR",
    "line_integrand",
    "entire_e_line",
    "entire_e_axis",
    "residue_at",
    "residue_partial_sum",
    "zeta",
    # functional equation
    "FeqReport",
    "select_form",
    "chi",
    "feq_rhs",
    "feq_check",
    # Mellin chain
    "MellinReport",
    "bose_integral",
    "exp_sq_integral",
    "sinh_integral",
    "mellin_check",
    # Euler-Maclaurin oracle
    "EulerMaclaurinParams",
    "bernoulli_even",
    "zeta_euler_maclaurin",
    "dirichlet_partial",
    "default_params",
]
