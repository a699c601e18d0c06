"""Modified Lommel functions of the first kind and their identities.

The normalized function evaluated here is the power series

    ltilde(mu, nu; x) = sum_{k>=0} (x/2)^(mu+2k+1) / (G(k+p) * G(k+q)),

        p = (mu - nu + 3)/2,   q = (mu + nu + 3)/2,

which is positive for all x > 0 when mu - nu >= -3 and mu + nu >= -3, and
reduces to the modified Struve function L_nu when mu = nu.  The
unnormalized companion is

    t(mu, nu; x) = 2^(mu-1) G((mu-nu+1)/2) G((mu+nu+1)/2) * ltilde(mu, nu; x).

Series terms are produced by the ratio recurrence

    term_{k+1} = term_k * (x^2/4) / ((k+p)(k+q)),

seeded by a signed-log first term, so no intermediate gamma value is ever
formed: at x = 100 the sum reaches ~1e42 while early gamma factors of a
naive evaluation would overflow long before the peak term.

Inhomogeneity term appearing in the three-term relations:

    a(mu, nu; x) = (x/2)^mu / (G((mu-nu+1)/2) * G((mu+nu+3)/2)),

negative whenever G((mu-nu+1)/2) is (e.g. mu - nu in (-3, -1)).

Supported argument range is 0 < x <= 700; beyond that e^x-scale values
leave double range and evaluation refuses rather than degrade.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError, EvaluationOverflowError, GammaPoleError
from .hypergeom import DEFAULT_TOL, MAX_TERMS, SeriesEval, _NeumaierSum, _check_tol
from .special import SignedLogValue, _is_nonpositive_integer, ln_gamma_signed

X_MAX = 700.0
_LARGE_X_OVERFLOW = 709.0


@dataclass(frozen=True)
class LommelParams:
    """Order pair (mu, nu) of a modified Lommel function."""

    mu: float
    nu: float

    @property
    def p(self) -> float:
        return (self.mu - self.nu + 3.0) / 2.0

    @property
    def q(self) -> float:
        return (self.mu + self.nu + 3.0) / 2.0

    def validate(self) -> None:
        """Reject order pairs whose series denominators hit gamma poles."""
        for arg, name in ((self.p, "(mu-nu+3)/2"), (self.q, "(mu+nu+3)/2")):
            if _is_nonpositive_integer(arg):
                raise GammaPoleError(
                    f"series gamma pole: {name} = {arg!r} is a non-positive integer "
                    f"for (mu, nu) = ({self.mu!r}, {self.nu!r})"
                )

    def shifted(self, delta: float) -> "LommelParams":
        return LommelParams(self.mu + delta, self.nu + delta)


@dataclass(frozen=True)
class PositivityDomain:
    """Whether (mu, nu) lies in the guaranteed-positivity region."""

    mu_minus_nu_ok: bool
    mu_plus_nu_ok: bool

    def __bool__(self) -> bool:
        return self.mu_minus_nu_ok and self.mu_plus_nu_ok


def positivity_domain(params: LommelParams) -> PositivityDomain:
    return PositivityDomain(
        mu_minus_nu_ok=params.mu - params.nu >= -3.0,
        mu_plus_nu_ok=params.mu + params.nu >= -3.0,
    )


def _check_x(x: float) -> None:
    if not (x > 0.0):
        raise DomainError(f"argument must satisfy x > 0, got x={x!r}")
    if x > X_MAX:
        raise DomainError(f"argument x={x!r} exceeds the supported range (0, {X_MAX}]")


def _series(params: LommelParams, x: float, tol: float,
            max_terms: int, with_derivative: bool):
    """Shared series loop; returns (SeriesEval, derivative or None)."""
    _check_x(x)
    _check_tol(tol)
    params.validate()
    p, q = params.p, params.q
    lead = ln_gamma_signed(p) * ln_gamma_signed(q)
    log_t0 = (params.mu + 1.0) * math.log(0.5 * x) - lead.log_abs
    term = lead.sign * math.exp(log_t0)

    acc = _NeumaierSum(term)
    dacc = _NeumaierSum(term * (params.mu + 1.0)) if with_derivative else None
    z = 0.25 * x * x
    past_peak = False
    small_run = 0
    for k in range(max_terms):
        ratio = z / ((k + p) * (k + q))
        term *= ratio
        acc.add(term)
        if dacc is not None:
            dacc.add(term * (params.mu + 2.0 * (k + 1) + 1.0))
        if abs(ratio) <= 1.0:
            past_peak = True
        if past_peak and abs(term) <= 0.5 * tol * abs(acc.high):
            small_run += 1
            if small_run >= 3:
                ev = SeriesEval(acc.total(), k + 2, 2.0 * abs(term), True)
                deriv = dacc.total() / x if dacc is not None else None
                return ev, deriv
        else:
            small_run = 0
    raise ConvergenceError(
        f"modified Lommel series did not converge within {max_terms} terms "
        f"at (mu, nu, x) = ({params.mu!r}, {params.nu!r}, {x!r})"
    )


def t_tilde(params: LommelParams, x: float, tol: float = DEFAULT_TOL,
            max_terms: int = MAX_TERMS) -> SeriesEval:
    """Normalized modified Lommel function of the first kind."""
    ev, _ = _series(params, x, tol, max_terms, with_derivative=False)
    return ev


def t_tilde_value(mu: float, nu: float, x: float, tol: float = DEFAULT_TOL) -> float:
    """Convenience scalar form of :func:`t_tilde`."""
    return t_tilde(LommelParams(mu, nu), x, tol).value


def t_tilde_with_derivative(params: LommelParams, x: float,
                            tol: float = DEFAULT_TOL) -> tuple[float, float]:
    """(value, d/dx value) via termwise differentiation of the series.

    Each term carries the factor (mu + 2k + 1)/x, so the derivative is exact
    for the truncated series and free of finite-difference noise.
    """
    ev, deriv = _series(params, x, tol, MAX_TERMS, with_derivative=True)
    return ev.value, deriv


def t_unnormalized(params: LommelParams, x: float, tol: float = DEFAULT_TOL) -> float:
    """Unnormalized modified Lommel function t(mu, nu; x)."""
    for arg, name in (((params.mu - params.nu + 1.0) / 2.0, "(mu-nu+1)/2"),
                      ((params.mu + params.nu + 1.0) / 2.0, "(mu+nu+1)/2")):
        if _is_nonpositive_integer(arg):
            raise GammaPoleError(
                f"normalization gamma pole: {name} = {arg!r} is a non-positive integer"
            )
    ev = t_tilde(params, x, tol)
    g1 = ln_gamma_signed((params.mu - params.nu + 1.0) / 2.0)
    g2 = ln_gamma_signed((params.mu + params.nu + 1.0) / 2.0)
    scale = SignedLogValue((params.mu - 1.0) * math.log(2.0), 1) * g1 * g2
    return scale.value() * ev.value


def modified_struve_L(nu: float, x: float, tol: float = DEFAULT_TOL) -> SeriesEval:
    """Modified Struve function L_nu(x), the mu = nu special case."""
    return t_tilde(LommelParams(nu, nu), x, tol)


def a_term(params: LommelParams, x: float) -> float:
    """Inhomogeneity a(mu, nu; x) of the three-term relations."""
    _check_x(x)
    g1_arg = (params.mu - params.nu + 1.0) / 2.0
    g2_arg = (params.mu + params.nu + 3.0) / 2.0
    for arg, name in ((g1_arg, "(mu-nu+1)/2"), (g2_arg, "(mu+nu+3)/2")):
        if _is_nonpositive_integer(arg):
            raise GammaPoleError(
                f"inhomogeneity gamma pole: {name} = {arg!r} is a non-positive integer"
            )
    g1 = ln_gamma_signed(g1_arg)
    g2 = ln_gamma_signed(g2_arg)
    log_abs = params.mu * math.log(0.5 * x) - g1.log_abs - g2.log_abs
    return g1.sign * g2.sign * math.exp(log_abs)


def recurrence_residuals(params: LommelParams, x: float,
                         tol: float = DEFAULT_TOL) -> tuple[float, float]:
    """Residuals of the two three-term relations; both vanish identically.

    r1 = down - up - (2 nu / x) * mid - a(mu, nu; x)
    r2 = down + up - 2 * mid' + a(mu, nu; x)

    where down/up are the order-shifted functions at (mu-1, nu-1) and
    (mu+1, nu+1) and mid' the termwise series derivative at (mu, nu).
    """
    down = t_tilde(params.shifted(-1.0), x, tol).value
    up = t_tilde(params.shifted(1.0), x, tol).value
    mid, mid_deriv = t_tilde_with_derivative(params, x, tol)
    a = a_term(params, x)
    r1 = down - up - (2.0 * params.nu / x) * mid - a
    r2 = down + up - 2.0 * mid_deriv + a
    return r1, r2


def asymptotic_small_x(params: LommelParams, x: float) -> float:
    """Two-term x -> 0 form; valid for mu > -3 and |nu| < mu + 3."""
    _check_x(x)
    mu, nu = params.mu, params.nu
    if not (mu > -3.0 and abs(nu) < mu + 3.0):
        raise DomainError(
            f"small-x form requires mu > -3 and |nu| < mu+3, got (mu, nu) = ({mu!r}, {nu!r})"
        )
    lead = ln_gamma_signed(params.p) * ln_gamma_signed(params.q)
    first = lead.sign * math.exp((mu + 1.0) * math.log(0.5 * x) - lead.log_abs)
    return first * (1.0 + x * x / ((mu + 3.0) ** 2 - nu * nu))


def asymptotic_large_x(params: LommelParams, x: float) -> float:
    """Three-term x -> infinity form e^x/sqrt(2 pi x) * (1 - c1/x + c2/x^2).

    The correction coefficients depend on nu only; both vanish at nu = 1/2.
    """
    _check_x(x)
    if x > _LARGE_X_OVERFLOW:
        raise EvaluationOverflowError(
            f"e^x exceeds double range at x={x!r}; large-x form unsupported there"
        )
    s = 4.0 * params.nu * params.nu
    corr = 1.0 - (s - 1.0) / (8.0 * x) + (s - 1.0) * (s - 9.0) / (128.0 * x * x)
    return math.exp(x) / math.sqrt(2.0 * math.pi * x) * corr


def check_monotonicity(params: LommelParams, x: float, tol: float = DEFAULT_TOL) -> bool:
    """True iff ltilde(mu, nu; x) < ltilde(mu-1, nu-1; x).

    The strict ordering is asserted only on its validity domain
    mu > -1/2, 1/2 <= nu < mu + 1; outside it the claim is undefined and a
    DomainError is raised.
    """
    mu, nu = params.mu, params.nu
    if not (mu > -0.5 and 0.5 <= nu < mu + 1.0):
        raise DomainError(
            "monotonicity claim requires mu > -1/2 and 1/2 <= nu < mu+1, "
            f"got (mu, nu) = ({mu!r}, {nu!r})"
        )
    here = t_tilde(params, x, tol).value
    lower_order = t_tilde(params.shifted(-1.0), x, tol).value
    return here < lower_order
