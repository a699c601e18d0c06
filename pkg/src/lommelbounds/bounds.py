"""The fourteen integral inequalities, their constants, and the error tables.

Every inequality bounds an integral of the form

    I = integral_0^x e^(-beta*u) * u^w * ltilde(M, N; u) du

(w = +-nu or nu+1, orders possibly shifted by n) by a closed expression in
ltilde values at x, or — for the two-sided hypergeometric bound — brackets
the 2F3 expression

    F(mu, nu; x) = x^(mu+2) / (2^(mu+1) (mu+nu+2) G(p) G(q))
                   * 2F3(1, (mu+nu+2)/2; p, q, (mu+nu+4)/2; x^2/4)

between ltilde(mu+1, nu+1; x) and a two-term combination of shifted
ltilde values.

Each inequality is registered as a descriptor carrying its parameter
domain, bound direction, strictness, equality condition, and evaluators.
``verify_inequality`` scores one (params, x) point: the integral side comes
from the integral engine (exact 2F3 form at beta = 0; adaptive quadrature
cross-checked against the incomplete-gamma series for beta > 0), the bound
side from the registered closed expression, and the verdict allows a
1e-10 relative guard band for floating-point rounding on strict
inequalities.

Deliberate deviations from the printed statements (each validated
empirically by the soundness sweep):

* the exp-weighted two-term upper bound (besi33) uses shift 0 for its
  subtracted constant (its statement names no shift) and keeps the
  exp(-beta x)/(1 - beta) damping on that constant: undamped, the printed
  inequality is false for large x and moderate beta (the polynomial
  overtakes the exponentially damped slack);
* the shifted reciprocal-weight lower bound (bi2) subtracts
  b * x^(mu-nu+n+2) (consistent with the derivative identity; the bare
  x^(n+2) only covers mu = nu);
* the shifted reciprocal-weight bounds (bi2, bi3) require
  mu > -(n+3)/2 (stated for nu, where it would be redundant).
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from importlib import resources
from typing import Callable

from .errors import DomainError, GammaPoleError, OracleDisagreementError
from .hypergeom import DEFAULT_TOL, hyp2F3
from .integrals import (
    QUAD_TOL,
    IntegralSpec,
    integral_closed_form,
    integral_exp_series,
    integral_quadrature,
)
from .lommel import LommelParams, t_tilde_value
from .special import _is_nonpositive_integer, ln_gamma_signed, log_scaled_lower_gamma

GUARD_BAND = 1e-10
ORACLE_CROSSCHECK_RTOL = 1e-6

LOWER, UPPER = "lower_bound_on_integral", "upper_bound_on_integral"
LOWER_F, UPPER_F = "lower_bound_on_F", "upper_bound_on_F"


@dataclass(frozen=True)
class InequalityParams:
    """Parameter tuple (mu, nu, shift n, damping beta) of one inequality."""

    mu: float
    nu: float
    n: float = 0.0
    beta: float = 0.0


@dataclass(frozen=True)
class TheoremConstants:
    """The four closed-form constants entering the polynomial bound terms."""

    a: float
    b: float
    c: float
    d: float


def _constant(name: str, numerators: tuple[float, ...],
              denominators: tuple[float, ...], pow2: float,
              gamma_args: tuple[float, ...]) -> float:
    """prod(numerators) / (2^pow2 * prod(denominators) * prod(Gamma(args)))."""
    if any(v == 0.0 for v in numerators):
        return 0.0
    sign = 1
    log_abs = -pow2 * math.log(2.0)
    for v in numerators:
        log_abs += math.log(abs(v))
        if v < 0.0:
            sign = -sign
    for v in denominators:
        if v == 0.0:
            raise DomainError(f"zero denominator factor in constant {name}")
        log_abs -= math.log(abs(v))
        if v < 0.0:
            sign = -sign
    for arg in gamma_args:
        if _is_nonpositive_integer(arg):
            raise GammaPoleError(
                f"gamma pole at argument {arg!r} in constant {name}"
            )
        g = ln_gamma_signed(arg)
        log_abs -= g.log_abs
        sign *= g.sign
    return sign * math.exp(log_abs)


def _constant_a(mu: float, nu: float, n: float) -> float:
    return _constant("a", (n + 1.0,),
                     (2.0 * nu + n + 1.0, mu + nu + n + 2.0),
                     mu + n + 1.0,
                     ((mu - nu + 1.0) / 2.0, (mu + nu + 2.0 * n + 5.0) / 2.0))


def _constant_b(mu: float, nu: float, n: float) -> float:
    return _constant("b", (2.0 * nu + n + 1.0,),
                     (mu - nu + n + 2.0, nu + n + 1.0),
                     mu + n + 2.0,
                     ((mu - nu + 1.0) / 2.0, (mu + nu + 2.0 * n + 5.0) / 2.0))


def _constant_c(mu: float, nu: float, n: float) -> float:
    return _constant("c", (2.0 * nu + n + 1.0, 2.0 * nu + n + 3.0),
                     (n + 1.0, mu - nu + n + 4.0, nu + n + 3.0),
                     mu + n + 4.0,
                     ((mu - nu + 1.0) / 2.0, (mu + nu + 2.0 * n + 9.0) / 2.0))


def _constant_d(mu: float, nu: float, n: float) -> float:
    return _constant("d", (2.0 * nu + n + 1.0,),
                     (n + 1.0, mu - nu + n + 2.0),
                     mu + n + 1.0,
                     ((mu - nu + 1.0) / 2.0, (mu + nu + 2.0 * n + 5.0) / 2.0))


def theorem_constants(mu: float, nu: float, n: float) -> TheoremConstants:
    """The constants a, b, c, d for the given (mu, nu, n).

    Bound evaluators pull only the constants they need (at the equality
    edge 2 nu + n = -1, b/c/d vanish while a's denominator is zero).
    """
    return TheoremConstants(_constant_a(mu, nu, n), _constant_b(mu, nu, n),
                            _constant_c(mu, nu, n), _constant_d(mu, nu, n))


def corollary_F(mu: float, nu: float, x: float, tol: float = DEFAULT_TOL) -> float:
    """The bracketed hypergeometric expression F(mu, nu; x).

    Equals the closed-form integral with weight u^nu divided by x^nu.
    Valid for mu > -3/2 and -1/2 < nu < mu + 1.
    """
    if not (mu > -1.5 and -0.5 < nu < mu + 1.0):
        raise DomainError(
            "F requires mu > -3/2 and -1/2 < nu < mu+1, got "
            f"(mu, nu) = ({mu!r}, {nu!r})"
        )
    if not (x > 0.0):
        raise DomainError(f"F requires x > 0, got {x!r}")
    params = LommelParams(mu, nu)
    params.validate()
    lead = ln_gamma_signed(params.p) * ln_gamma_signed(params.q)
    log_front = ((mu + 2.0) * math.log(x) - (mu + 1.0) * math.log(2.0)
                 - math.log(mu + nu + 2.0) - lead.log_abs)
    series = hyp2F3(1.0, (mu + nu + 2.0) / 2.0,
                    params.p, params.q, (mu + nu + 4.0) / 2.0,
                    0.25 * x * x, tol)
    return lead.sign * math.exp(log_front) * series.value


# --- bound expressions ------------------------------------------------------

def _tt(mu, nu, x, tol):
    return t_tilde_value(mu, nu, x, tol)


def _gamma_pair_log(mu: float, nu: float):
    params = LommelParams(mu, nu)
    params.validate()
    return ln_gamma_signed(params.p) * ln_gamma_signed(params.q)


def _bound_besi11(p: InequalityParams, x: float, tol: float) -> float:
    return math.exp(-p.beta * x) * x ** p.nu * _tt(p.mu + p.n + 1.0, p.nu + p.n + 1.0, x, tol)


def _bound_fcp100(p: InequalityParams, x: float, tol: float) -> float:
    return x ** p.nu * _tt(p.mu, p.nu, x, tol)


def _bound_besi22(p: InequalityParams, x: float, tol: float) -> float:
    mu, nu, n = p.mu, p.nu, p.n
    main = (x ** nu / (2.0 * nu + n + 1.0)
            * (2.0 * (nu + n + 1.0) * _tt(mu + n + 1.0, nu + n + 1.0, x, tol)
               - (n + 1.0) * _tt(mu + n + 3.0, nu + n + 3.0, x, tol)))
    return main - _constant_a(mu, nu, n) * x ** (mu + nu + n + 2.0)


def _bound_pron(p: InequalityParams, x: float, tol: float) -> float:
    undamped = integral_closed_form(
        IntegralSpec(p.mu, p.nu, p.nu, x, 0.0), tol)
    return math.exp(-p.beta * x) / (1.0 - p.beta) * undamped


def _bound_besi33(p: InequalityParams, x: float, tol: float) -> float:
    # The damping factor applies to the subtracted constant as well: the
    # bound is the exp-damping upper bound applied to the beta = 0 two-term
    # bound in full.  Leaving the constant undamped (as printed) produces a
    # false inequality for large x and moderate beta.
    mu, nu, beta = p.mu, p.nu, p.beta
    undamped = (x ** nu / (2.0 * nu + 1.0)
                * (2.0 * (nu + 1.0) * _tt(mu + 1.0, nu + 1.0, x, tol)
                   - _tt(mu + 3.0, nu + 3.0, x, tol))
                - _constant_a(mu, nu, 0.0) * x ** (mu + nu + 2.0))
    return math.exp(-beta * x) / (1.0 - beta) * undamped


def _bound_besi44(p: InequalityParams, x: float, tol: float) -> float:
    return math.exp(-p.beta * x) * x ** (p.nu + 1.0) * _tt(p.mu + 1.0, p.nu + 1.0, x, tol)


def _bound_besi55(p: InequalityParams, x: float, tol: float) -> float:
    return _bound_besi44(p, x, tol) / (1.0 - p.beta)


def _bound_bi1(p: InequalityParams, x: float, tol: float) -> float:
    mu, nu = p.mu, p.nu
    lead = _gamma_pair_log(mu, nu)
    poly = lead.sign * math.exp((mu - nu + 1.0) * math.log(x)
                                - (mu + 1.0) * math.log(2.0) - lead.log_abs)
    return _tt(mu, nu, x, tol) / x ** nu - poly


def _bound_bi2(p: InequalityParams, x: float, tol: float) -> float:
    mu, nu, n = p.mu, p.nu, p.n
    return (_tt(mu + n + 1.0, nu + n + 1.0, x, tol) / x ** nu
            - _constant_b(mu, nu, n) * x ** (mu - nu + n + 2.0))


def _bound_bi3(p: InequalityParams, x: float, tol: float) -> float:
    mu, nu, n = p.mu, p.nu, p.n
    return (2.0 * (nu + n + 1.0) / (n + 1.0)
            * _tt(mu + n + 1.0, nu + n + 1.0, x, tol) / x ** nu
            - (2.0 * nu + n + 1.0) / (n + 1.0)
            * _tt(mu + n + 3.0, nu + n + 3.0, x, tol) / x ** nu
            + _constant_c(mu, nu, n) * x ** (mu - nu + n + 4.0)
            - _constant_d(mu, nu, n) * x ** (mu - nu + n + 2.0))


def _scaled_gamma_term(mu: float, nu: float, x: float, beta: float) -> float:
    """beta^(-(mu-nu+1)) * gamma_low(mu-nu+2, beta*x) / (2^(mu+1) G(p) G(q))."""
    lead = _gamma_pair_log(mu, nu)
    log_abs = (math.log(beta) + log_scaled_lower_gamma(mu - nu + 2.0, x, beta)
               - (mu + 1.0) * math.log(2.0) - lead.log_abs)
    return lead.sign * math.exp(log_abs)


def _bound_bi4(p: InequalityParams, x: float, tol: float) -> float:
    mu, nu, beta = p.mu, p.nu, p.beta
    undamped = integral_closed_form(IntegralSpec(mu, nu, -nu, x, 0.0), tol)
    return (math.exp(-beta * x) * undamped
            - _scaled_gamma_term(mu, nu, x, beta)) / (1.0 - beta)


def _bound_bi5(p: InequalityParams, x: float, tol: float) -> float:
    mu, nu, beta = p.mu, p.nu, p.beta
    lead = _gamma_pair_log(mu, nu)
    poly = lead.sign * math.exp((mu - nu + 1.0) * math.log(x)
                                - (mu + 1.0) * math.log(2.0) - lead.log_abs)
    return (math.exp(-beta * x) * _tt(mu, nu, x, tol) / x ** nu
            - poly - _scaled_gamma_term(mu, nu, x, beta)) / (1.0 - beta)


def _bound_cor_lower(p: InequalityParams, x: float, tol: float) -> float:
    return _tt(p.mu + 1.0, p.nu + 1.0, x, tol)


def _bound_cor_upper(p: InequalityParams, x: float, tol: float) -> float:
    mu, nu = p.mu, p.nu
    t1 = _tt(mu + 1.0, nu + 1.0, x, tol)
    t3 = _tt(mu + 3.0, nu + 3.0, x, tol)
    return (t1 * (1.0 + (1.0 - t3 / t1) / (2.0 * nu + 1.0))
            - _constant_a(mu, nu, 0.0) * x ** (mu + 2.0))


# --- descriptor registry ----------------------------------------------------

@dataclass(frozen=True)
class InequalityDescriptor:
    """One registered inequality: identity, domain, direction, evaluators.

    ``beta_range`` is (lo, hi, strict_hi); lo > 0 encodes strictly positive
    beta.  When ``beta_inert`` is set the inequality itself carries no
    exponential weight: any beta in [0, 1) is accepted and ignored (the
    blanket theorem hypotheses scope over such ids even though beta never
    appears in them).
    """

    ident: str
    direction: str
    strict: bool
    equality_condition: str | None
    uses_n: bool
    beta_inert: bool
    beta_range: tuple[float, float, bool] | None
    domain: Callable[[InequalityParams], list[str]]
    integrand: Callable[[InequalityParams, float], IntegralSpec] | None
    bound: Callable[[InequalityParams, float, float], float]
    tight_large_x: bool
    tight_large_x_needs_beta0: bool = False
    tight_small_x: bool = False

    def check_domain(self, params: InequalityParams) -> list[str]:
        violations = list(self.domain(params))
        if not self.uses_n and params.n != 0.0:
            violations.append(f"{self.ident} takes no shift n (got n={params.n!r})")
        if self.uses_n and not params.n > -1.0:
            violations.append(f"n > -1 violated (n={params.n!r})")
        if self.beta_inert:
            if not (0.0 <= params.beta < 1.0):
                violations.append(
                    f"beta is inert for {self.ident} and must lie in [0, 1) "
                    f"(got beta={params.beta!r})")
        else:
            lo, hi, strict_hi = self.beta_range
            if lo > 0.0:
                if not params.beta > 0.0:
                    violations.append(f"beta > 0 violated (beta={params.beta!r})")
            elif params.beta < 0.0:
                violations.append(f"beta >= 0 violated (beta={params.beta!r})")
            if strict_hi and not params.beta < hi:
                violations.append(f"beta < {hi} violated (beta={params.beta!r})")
        return violations


def _dom_besi11(p: InequalityParams) -> list[str]:
    v = []
    if not p.mu > -(p.n + 5.0) / 2.0:
        v.append(f"mu > -(n+5)/2 violated (mu={p.mu!r}, n={p.n!r})")
    if not (-p.n - p.mu - 2.0 < p.nu <= p.mu + 3.0):
        v.append(f"-n-mu-2 < nu <= mu+3 violated (nu={p.nu!r})")
    return v


def _dom_halfline(p: InequalityParams) -> list[str]:
    v = []
    if not p.mu > -0.5:
        v.append(f"mu > -1/2 violated (mu={p.mu!r})")
    if not (0.5 <= p.nu < p.mu + 1.0):
        v.append(f"1/2 <= nu < mu+1 violated (nu={p.nu!r})")
    return v


def _dom_shifted(p: InequalityParams) -> list[str]:
    v = []
    if not p.mu > -(p.n + 3.0) / 2.0:
        v.append(f"mu > -(n+3)/2 violated (mu={p.mu!r}, n={p.n!r})")
    if not (-(p.n + 1.0) / 2.0 < p.nu < p.mu + 1.0):
        v.append(f"-(n+1)/2 < nu < mu+1 violated (nu={p.nu!r})")
    return v


def _dom_shifted_with_equality_edge(p: InequalityParams) -> list[str]:
    # As _dom_shifted, but the left nu edge 2 nu + n = -1 is admitted: the
    # two shifted reciprocal-weight bounds coincide there (their polynomial
    # constants all carry the factor 2 nu + n + 1).
    v = []
    if not p.mu > -(p.n + 3.0) / 2.0:
        v.append(f"mu > -(n+3)/2 violated (mu={p.mu!r}, n={p.n!r})")
    if not (-(p.n + 1.0) / 2.0 <= p.nu < p.mu + 1.0):
        v.append(f"-(n+1)/2 <= nu < mu+1 violated (nu={p.nu!r})")
    return v


def _dom_besi44(p: InequalityParams) -> list[str]:
    v = []
    if not p.mu > -3.0:
        v.append(f"mu > -3 violated (mu={p.mu!r})")
    if not abs(p.nu) < p.mu + 3.0:
        v.append(f"|nu| < mu+3 violated (nu={p.nu!r})")
    return v


def _dom_three_halves(p: InequalityParams) -> list[str]:
    v = []
    if not p.mu > -1.5:
        v.append(f"mu > -3/2 violated (mu={p.mu!r})")
    if not (-0.5 <= p.nu < p.mu + 1.0):
        v.append(f"-1/2 <= nu < mu+1 violated (nu={p.nu!r})")
    return v


def _dom_corollary(p: InequalityParams) -> list[str]:
    v = []
    if not p.mu > -1.5:
        v.append(f"mu > -3/2 violated (mu={p.mu!r})")
    if not (-0.5 < p.nu < p.mu + 1.0):
        v.append(f"-1/2 < nu < mu+1 violated (nu={p.nu!r})")
    return v


# Integrand builders; ids with inert beta integrate without damping.

def _spec_plain(p: InequalityParams, x: float) -> IntegralSpec:
    return IntegralSpec(p.mu, p.nu, p.nu, x, p.beta)


def _spec_plain_undamped(p: InequalityParams, x: float) -> IntegralSpec:
    return IntegralSpec(p.mu, p.nu, p.nu, x, 0.0)


def _spec_shifted(p: InequalityParams, x: float) -> IntegralSpec:
    return IntegralSpec(p.mu + p.n, p.nu + p.n, p.nu, x, p.beta)


def _spec_shifted_undamped(p: InequalityParams, x: float) -> IntegralSpec:
    return IntegralSpec(p.mu + p.n, p.nu + p.n, p.nu, x, 0.0)


def _spec_weight_plus1(p: InequalityParams, x: float) -> IntegralSpec:
    return IntegralSpec(p.mu, p.nu, p.nu + 1.0, x, p.beta)


def _spec_reciprocal(p: InequalityParams, x: float) -> IntegralSpec:
    return IntegralSpec(p.mu, p.nu, -p.nu, x, p.beta)


def _spec_reciprocal_undamped(p: InequalityParams, x: float) -> IntegralSpec:
    return IntegralSpec(p.mu, p.nu, -p.nu, x, 0.0)


def _spec_reciprocal_shifted_undamped(p: InequalityParams, x: float) -> IntegralSpec:
    return IntegralSpec(p.mu + p.n, p.nu + p.n, -p.nu, x, 0.0)


# (lo, hi, strict_hi); lo > 0 encodes a strictly positive beta requirement.
_ANY_BETA = (0.0, math.inf, False)
_BETA_LT1 = (0.0, 1.0, True)
_BETA_POS_LT1 = (5e-324, 1.0, True)

REGISTRY: dict[str, InequalityDescriptor] = {}


def _register(desc: InequalityDescriptor) -> None:
    REGISTRY[desc.ident] = desc


_register(InequalityDescriptor(
    "besi11", LOWER, strict=True, equality_condition=None,
    uses_n=True, beta_inert=False, beta_range=_ANY_BETA,
    domain=_dom_besi11, integrand=_spec_shifted, bound=_bound_besi11,
    tight_large_x=True, tight_large_x_needs_beta0=True))
_register(InequalityDescriptor(
    "fcp100", UPPER, strict=True, equality_condition=None,
    uses_n=False, beta_inert=True, beta_range=None,
    domain=_dom_halfline, integrand=_spec_plain_undamped, bound=_bound_fcp100,
    tight_large_x=True))
_register(InequalityDescriptor(
    "besi22", UPPER, strict=True, equality_condition=None,
    uses_n=True, beta_inert=True, beta_range=None,
    domain=_dom_shifted, integrand=_spec_shifted_undamped, bound=_bound_besi22,
    tight_large_x=True, tight_small_x=True))
_register(InequalityDescriptor(
    "pron", UPPER, strict=False, equality_condition="beta = 0",
    uses_n=False, beta_inert=False, beta_range=_BETA_LT1,
    domain=_dom_halfline, integrand=_spec_plain, bound=_bound_pron,
    tight_large_x=True))
_register(InequalityDescriptor(
    "besi33", UPPER, strict=True, equality_condition=None,
    uses_n=False, beta_inert=False, beta_range=_BETA_LT1,
    domain=_dom_halfline, integrand=_spec_plain, bound=_bound_besi33,
    tight_large_x=True))
_register(InequalityDescriptor(
    "besi44", LOWER, strict=False, equality_condition="beta = 0",
    uses_n=False, beta_inert=False, beta_range=_ANY_BETA,
    domain=_dom_besi44, integrand=_spec_weight_plus1, bound=_bound_besi44,
    tight_large_x=True, tight_large_x_needs_beta0=True, tight_small_x=True))
_register(InequalityDescriptor(
    "besi55", UPPER, strict=False, equality_condition="beta = 0",
    uses_n=False, beta_inert=False, beta_range=_BETA_LT1,
    domain=_dom_three_halves, integrand=_spec_weight_plus1, bound=_bound_besi55,
    tight_large_x=True))
_register(InequalityDescriptor(
    "bi1", LOWER, strict=True, equality_condition=None,
    uses_n=False, beta_inert=True, beta_range=None,
    domain=_dom_three_halves, integrand=_spec_reciprocal_undamped, bound=_bound_bi1,
    tight_large_x=True))
_register(InequalityDescriptor(
    "bi2", LOWER, strict=True, equality_condition="2 nu + n = -1",
    uses_n=True, beta_inert=True, beta_range=None,
    domain=_dom_shifted_with_equality_edge,
    integrand=_spec_reciprocal_shifted_undamped, bound=_bound_bi2,
    tight_large_x=True))
_register(InequalityDescriptor(
    "bi3", UPPER, strict=True, equality_condition="2 nu + n = -1",
    uses_n=True, beta_inert=True, beta_range=None,
    domain=_dom_shifted_with_equality_edge,
    integrand=_spec_reciprocal_shifted_undamped, bound=_bound_bi3,
    tight_large_x=True, tight_small_x=True))
_register(InequalityDescriptor(
    "bi4", LOWER, strict=True, equality_condition=None,
    uses_n=False, beta_inert=False, beta_range=_BETA_POS_LT1,
    domain=_dom_three_halves, integrand=_spec_reciprocal, bound=_bound_bi4,
    tight_large_x=True))
_register(InequalityDescriptor(
    "bi5", LOWER, strict=True, equality_condition=None,
    uses_n=False, beta_inert=False, beta_range=_BETA_POS_LT1,
    domain=_dom_three_halves, integrand=_spec_reciprocal, bound=_bound_bi5,
    tight_large_x=True))
_register(InequalityDescriptor(
    "cor_lower", LOWER_F, strict=True, equality_condition=None,
    uses_n=False, beta_inert=True, beta_range=None,
    domain=_dom_corollary, integrand=None, bound=_bound_cor_lower,
    tight_large_x=True))
_register(InequalityDescriptor(
    "cor_upper", UPPER_F, strict=True, equality_condition=None,
    uses_n=False, beta_inert=True, beta_range=None,
    domain=_dom_corollary, integrand=None, bound=_bound_cor_upper,
    tight_large_x=True, tight_small_x=True))

ID_ALIASES = {"100fcp": "fcp100"}
ALL_IDS = tuple(REGISTRY)


def resolve_id(ident: str) -> str:
    ident = ID_ALIASES.get(ident, ident)
    if ident not in REGISTRY:
        raise DomainError(
            f"unknown inequality id {ident!r}; known ids: {', '.join(ALL_IDS)}")
    return ident


@dataclass(frozen=True)
class BoundCheck:
    """One scored inequality check at a single (params, x) point.

    ``slack`` is direction-signed (bound - integral for upper bounds,
    integral - bound for lower bounds), so a nonnegative slack certifies
    the inequality; ``satisfied`` allows the floating-point guard band.
    """

    ident: str
    params: InequalityParams
    x: float
    integral_value: float
    bound_value: float
    satisfied: bool
    slack: float
    ratio: float


def bound_value(ident: str, params: InequalityParams, x: float,
                tol: float = DEFAULT_TOL) -> float:
    """Evaluate the bound side of the named inequality."""
    desc = REGISTRY[resolve_id(ident)]
    violations = desc.check_domain(params)
    if violations:
        raise DomainError("; ".join(violations))
    if not (x > 0.0):
        raise DomainError(f"x must be > 0, got {x!r}")
    return desc.bound(params, x, tol)


def oracle_integral(spec: IntegralSpec, oracle_tol: float = QUAD_TOL,
                    tol: float = DEFAULT_TOL) -> float:
    """Trusted value of the integral side.

    beta = 0 uses the exact 2F3 form; beta > 0 uses adaptive quadrature
    cross-checked against the incomplete-gamma series, aborting if the two
    routes disagree beyond 1e-6 relative.
    """
    if spec.beta == 0.0:
        return integral_closed_form(spec, tol)
    quad = integral_quadrature(spec, oracle_tol)
    series = integral_exp_series(spec, tol=min(tol, 1e-11)).value
    if abs(quad - series) > ORACLE_CROSSCHECK_RTOL * max(abs(quad), abs(series)):
        raise OracleDisagreementError(
            f"quadrature {quad!r} and series {series!r} disagree beyond "
            f"{ORACLE_CROSSCHECK_RTOL} relative for {spec!r}"
        )
    return quad


def verify_inequality(ident: str, params: InequalityParams, x: float,
                      oracle_tol: float = QUAD_TOL,
                      tol: float = DEFAULT_TOL) -> BoundCheck:
    """Score one inequality at one point against the integral oracle."""
    ident = resolve_id(ident)
    desc = REGISTRY[ident]
    violations = desc.check_domain(params)
    if violations:
        raise DomainError("; ".join(violations))
    if not (x > 0.0):
        raise DomainError(f"x must be > 0, got {x!r}")

    if desc.integrand is None:
        reference = corollary_F(params.mu, params.nu, x, tol)
    else:
        reference = oracle_integral(desc.integrand(params, x), oracle_tol, tol)
    bound = desc.bound(params, x, tol)

    if desc.direction in (UPPER, UPPER_F):
        slack = bound - reference
    else:
        slack = reference - bound
    scale = max(abs(reference), abs(bound))
    satisfied = slack >= -GUARD_BAND * scale
    ratio = bound / reference if reference != 0.0 else math.inf
    return BoundCheck(ident, params, x, reference, bound, satisfied, slack, ratio)


def tightness_sweep(ident: str, params: InequalityParams, x_grid,
                    oracle_tol: float = QUAD_TOL,
                    tol: float = DEFAULT_TOL) -> list[BoundCheck]:
    """Verify over an ascending grid; exposes the bound/integral ratio path."""
    xs = list(x_grid)
    if not xs:
        raise DomainError("x grid must be nonempty")
    if any(not (x > 0.0) for x in xs):
        raise DomainError("x grid values must be > 0")
    if sorted(xs) != xs:
        raise DomainError("x grid must be ascending")
    return [verify_inequality(ident, params, x, oracle_tol, tol) for x in xs]


# --- the relative-error tables ---------------------------------------------

@dataclass(frozen=True)
class TableCell:
    """Relative errors of both bracket sides at one (mu, nu, x)."""

    mu: float
    nu: float
    x: float
    rel_err_lower: float
    rel_err_upper: float


def _reference_data() -> dict:
    text = resources.files(__package__).joinpath("reference_tables.json").read_text()
    return json.loads(text)


_REF_CACHE: dict | None = None


def reference_table(which: int) -> dict[tuple[float, float, float], float]:
    """Published rounded table values keyed by (mu, nu, x)."""
    global _REF_CACHE
    if _REF_CACHE is None:
        _REF_CACHE = _reference_data()
    data = _REF_CACHE
    if which == 1:
        grid = data["lower_rel_err"]
    elif which == 2:
        grid = data["upper_rel_err"]
    else:
        raise DomainError(f"table selector must be 1 or 2, got {which!r}")
    out = {}
    for (mu, nu), row in zip(data["rows"], grid):
        for x, value in zip(data["x_grid"], row):
            out[(mu, nu, x)] = value
    return out


def table_grid() -> tuple[list[tuple[float, float]], list[float]]:
    """The (mu, nu) rows and x columns of the published tables."""
    global _REF_CACHE
    if _REF_CACHE is None:
        _REF_CACHE = _reference_data()
    return ([tuple(r) for r in _REF_CACHE["rows"]], list(_REF_CACHE["x_grid"]))


def reproduce_table(which: int = 1, tol: float = DEFAULT_TOL) -> list[TableCell]:
    """Recompute the full 15 x 7 grid of relative bracket errors.

    Cells carry both (F - L)/F and (U - F)/F regardless of ``which``; the
    selector only matters for callers printing one table.
    """
    if which not in (1, 2):
        raise DomainError(f"table selector must be 1 or 2, got {which!r}")
    rows, xs = table_grid()
    cells = []
    for mu, nu in rows:
        p = InequalityParams(mu, nu)
        for x in xs:
            f = corollary_F(mu, nu, x, tol)
            lower = _bound_cor_lower(p, x, tol)
            upper = _bound_cor_upper(p, x, tol)
            cells.append(TableCell(mu, nu, x,
                                   rel_err_lower=(f - lower) / f,
                                   rel_err_upper=(upper - f) / f))
    return cells


# --- seeded domain sampling -------------------------------------------------

_N_BOX = (-0.95, 4.0)
_MU_CAP = 15.0
_X_BOX = (0.0, 100.0)


def sample_params(ident: str, rng: random.Random) -> tuple[InequalityParams, float]:
    """Draw (params, x) uniformly inside the inequality's domain box.

    Each constrained coordinate is uniform within its stated interval,
    intersected with mu <= 15, |nu| <= 15, n in (-0.95, 4], x in (0, 100];
    beta is uniform on [0, 0.95] where beta < 1 is required and on
    [0, 1.25] where any beta >= 0 is allowed.
    """
    ident = resolve_id(ident)
    desc = REGISTRY[ident]
    n = rng.uniform(*_N_BOX) if desc.uses_n else 0.0
    if ident == "besi11":
        mu = rng.uniform(-(n + 5.0) / 2.0, _MU_CAP)
        nu = rng.uniform(max(-n - mu - 2.0, -_MU_CAP), min(mu + 3.0, _MU_CAP))
    elif ident in ("fcp100", "pron", "besi33"):
        mu = rng.uniform(-0.5, _MU_CAP)
        nu = rng.uniform(0.5, min(mu + 1.0, _MU_CAP))
    elif ident in ("besi22", "bi2", "bi3"):
        mu = rng.uniform(-(n + 3.0) / 2.0, _MU_CAP)
        nu = rng.uniform(-(n + 1.0) / 2.0, min(mu + 1.0, _MU_CAP))
    elif ident == "besi44":
        mu = rng.uniform(-3.0, _MU_CAP)
        nu = rng.uniform(max(-(mu + 3.0), -_MU_CAP), min(mu + 3.0, _MU_CAP))
    else:  # besi55, bi1, bi4, bi5, cor_lower, cor_upper
        mu = rng.uniform(-1.5, _MU_CAP)
        nu = rng.uniform(-0.5, min(mu + 1.0, _MU_CAP))
    if desc.beta_inert:
        beta = 0.0
    else:
        lo, hi, strict_hi = desc.beta_range
        if strict_hi:
            beta = rng.uniform(1e-3 if lo > 0.0 else 0.0, 0.95)
        else:
            beta = rng.uniform(0.0, 1.25)
    x = 0.0
    while x < 1e-6:
        x = rng.uniform(*_X_BOX)
    params = InequalityParams(mu, nu, n, beta)
    if desc.check_domain(params):
        # Clipping can only have shrunk the box, so this is unreachable;
        # kept as a tripwire for registry edits.
        raise AssertionError(f"sampled point escaped the {ident} domain")
    return params, x
