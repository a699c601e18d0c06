"""Exception hierarchy shared by every module in the package."""


class LommelBoundsError(Exception):
    """Base class for all package errors."""


class DomainError(LommelBoundsError, ValueError):
    """An input violates a stated precondition or validity domain.

    The message names the violated constraint.
    """


class GammaPoleError(DomainError):
    """A gamma-function argument is a non-positive integer."""


class ConvergenceError(LommelBoundsError, ArithmeticError):
    """A series or quadrature failed to reach the requested tolerance."""


class EvaluationOverflowError(LommelBoundsError, OverflowError):
    """A finite mathematical value exceeds double range."""


class OracleDisagreementError(LommelBoundsError, ArithmeticError):
    """Two independent evaluation routes disagree beyond the trust threshold."""
