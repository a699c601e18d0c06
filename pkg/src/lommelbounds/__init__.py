"""Modified Lommel functions of the first kind, their integral bounds,
and numerical verification of the bounding inequalities.

Layers, bottom up: ``special`` (gamma primitives), ``hypergeom`` (1F2/2F3
summation), ``lommel`` (the functions and their identities), ``integrals``
(closed form, exponentially weighted series, quadrature oracle), ``bounds``
(the fourteen inequalities and the relative-error tables), ``cli``.
"""

from .errors import (
    ConvergenceError,
    DomainError,
    EvaluationOverflowError,
    GammaPoleError,
    LommelBoundsError,
    OracleDisagreementError,
)
from .special import (
    SignedLogValue,
    gamma,
    ln_gamma_signed,
    log_scaled_lower_gamma,
    lower_incomplete_gamma,
    regularized_lower_gamma,
)
from .hypergeom import SeriesEval, hyp1F2, hyp2F3
from .lommel import (
    LommelParams,
    PositivityDomain,
    a_term,
    asymptotic_large_x,
    asymptotic_small_x,
    check_monotonicity,
    modified_struve_L,
    positivity_domain,
    recurrence_residuals,
    t_tilde,
    t_tilde_value,
    t_tilde_with_derivative,
    t_unnormalized,
)
from .integrals import (
    IntegralSpec,
    integral_closed_form,
    integral_exp_series,
    integral_quadrature,
)
from .bounds import (
    ALL_IDS,
    BoundCheck,
    InequalityDescriptor,
    InequalityParams,
    REGISTRY,
    TableCell,
    TheoremConstants,
    bound_value,
    corollary_F,
    oracle_integral,
    reference_table,
    reproduce_table,
    resolve_id,
    sample_params,
    table_grid,
    theorem_constants,
    tightness_sweep,
    verify_inequality,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_IDS",
    "BoundCheck",
    "ConvergenceError",
    "DomainError",
    "EvaluationOverflowError",
    "GammaPoleError",
    "InequalityDescriptor",
    "InequalityParams",
    "IntegralSpec",
    "LommelBoundsError",
    "LommelParams",
    "OracleDisagreementError",
    "PositivityDomain",
    "REGISTRY",
    "SeriesEval",
    "SignedLogValue",
    "TableCell",
    "TheoremConstants",
    "a_term",
    "asymptotic_large_x",
    "asymptotic_small_x",
    "bound_value",
    "check_monotonicity",
    "corollary_F",
    "gamma",
    "hyp1F2",
    "hyp2F3",
    "integral_closed_form",
    "integral_exp_series",
    "integral_quadrature",
    "ln_gamma_signed",
    "log_scaled_lower_gamma",
    "lower_incomplete_gamma",
    "modified_struve_L",
    "oracle_integral",
    "positivity_domain",
    "recurrence_residuals",
    "reference_table",
    "regularized_lower_gamma",
    "reproduce_table",
    "resolve_id",
    "sample_params",
    "t_tilde",
    "t_tilde_value",
    "t_tilde_with_derivative",
    "t_unnormalized",
    "table_grid",
    "theorem_constants",
    "tightness_sweep",
    "verify_inequality",
]
