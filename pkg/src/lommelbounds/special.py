"""Scalar special-function building blocks.

Everything else in the package reduces to three primitives: the gamma
function (including negative non-integer arguments), a signed log-gamma
for overflow-free products of gamma factors, and the lower incomplete
gamma function

    gamma_low(a, x) = integral_0^x u^(a-1) e^(-u) du,   a > 0, x >= 0.

The incomplete gamma is evaluated by the classical split: a power series
in x for x < a + 1 and a Lentz continued fraction for the upper tail when
x >= a + 1.  A fused, log-space variant ``log_scaled_lower_gamma`` computes
log(beta^(-a) * gamma_low(a, beta*x)) without forming either factor, which
is required by the exponentially weighted integral series where the two
factors separately overflow or underflow for small beta.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError, EvaluationOverflowError, GammaPoleError

# exp() overflows just above this; used as a guard before exponentiating.
_MAX_EXP = 709.0


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0.0 and x == math.floor(x)


@dataclass(frozen=True)
class SignedLogValue:
    """A real number stored as (sign, log of absolute value).

    ``sign`` is -1, 0 or +1; when it is 0 the value is exactly zero and
    ``log_abs`` is ignored.
    """

    log_abs: float
    sign: int

    def value(self) -> float:
        """Reconstruct the plain float, raising on double-range overflow."""
        if self.sign == 0:
            return 0.0
        if self.log_abs > _MAX_EXP:
            raise EvaluationOverflowError(
                f"value exp({self.log_abs:.3g}) exceeds double range"
            )
        return self.sign * math.exp(self.log_abs)

    def __mul__(self, other: "SignedLogValue") -> "SignedLogValue":
        if self.sign == 0 or other.sign == 0:
            return SignedLogValue(0.0, 0)
        return SignedLogValue(self.log_abs + other.log_abs, self.sign * other.sign)


def gamma(x: float) -> float:
    """Gamma function for real non-pole arguments.

    Negative non-integer arguments are supported (libm uses the reflection
    formula there).  Raises ``GammaPoleError`` at non-positive integers and
    ``EvaluationOverflowError`` when |Gamma(x)| exceeds double range.
    """
    if _is_nonpositive_integer(x):
        raise GammaPoleError(f"gamma pole at x={x!r} (non-positive integer)")
    try:
        return math.gamma(x)
    except OverflowError as exc:
        raise EvaluationOverflowError(f"gamma({x!r}) exceeds double range") from exc


def ln_gamma_signed(x: float) -> SignedLogValue:
    """Signed log of Gamma(x): sign * exp(log_abs) = Gamma(x).

    Gamma has no zeros, so the sign is never 0.  For x < 0 the sign
    alternates between integer poles: negative on (-1,0), positive on
    (-2,-1), and so on.
    """
    if _is_nonpositive_integer(x):
        raise GammaPoleError(f"gamma pole at x={x!r} (non-positive integer)")
    log_abs = math.lgamma(x)
    if x > 0:
        sign = 1
    else:
        sign = 1 if math.floor(x) % 2 == 0 else -1
    return SignedLogValue(log_abs, sign)


def _lower_series_log_sum(a: float, z: float) -> float:
    """log of S = sum_{m>=0} z^m / (a (a+1) ... (a+m)), for 0 <= z < a+1.

    gamma_low(a, z) = z^a e^(-z) S.  All terms are positive.
    """
    if z == 0.0:
        return -math.log(a)
    term = 1.0 / a
    total = term
    for m in range(1, 10000):
        term *= z / (a + m)
        total += term
        if term < total * 1e-17:
            return math.log(total)
    raise ConvergenceError(f"incomplete-gamma series stalled at a={a}, z={z}")


def _upper_cf_log(a: float, z: float) -> float:
    """log of Gamma_up(a, z) by Lentz continued fraction, for z >= a+1."""
    tiny = 1e-300
    b = z + 1.0 - a
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 10000):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            return -z + a * math.log(z) + math.log(h)
    raise ConvergenceError(f"incomplete-gamma continued fraction stalled at a={a}, z={z}")


def _log_lower_gamma(a: float, z: float) -> float:
    """log(gamma_low(a, z)) for a > 0, z > 0."""
    if z < a + 1.0:
        return a * math.log(z) - z + _lower_series_log_sum(a, z)
    # Upper tail is the small piece here; complement through Q = Gamma_up/Gamma.
    log_q = _upper_cf_log(a, z) - math.lgamma(a)
    return math.lgamma(a) + math.log1p(-math.exp(log_q))


def lower_incomplete_gamma(a: float, x: float) -> float:
    """gamma_low(a, x) = integral_0^x u^(a-1) e^(-u) du.

    Monotone non-decreasing in x, tending to Gamma(a) as x -> infinity.
    """
    if a <= 0.0:
        raise DomainError(f"lower_incomplete_gamma requires a > 0, got a={a!r}")
    if x < 0.0:
        raise DomainError(f"lower_incomplete_gamma requires x >= 0, got x={x!r}")
    if x == 0.0:
        return 0.0
    log_value = _log_lower_gamma(a, x)
    if log_value > _MAX_EXP:
        raise EvaluationOverflowError(
            f"lower_incomplete_gamma({a!r}, {x!r}) exceeds double range"
        )
    return math.exp(log_value)


def regularized_lower_gamma(a: float, x: float) -> float:
    """P(a, x) = gamma_low(a, x) / Gamma(a), always in [0, 1]."""
    if a <= 0.0:
        raise DomainError(f"regularized_lower_gamma requires a > 0, got a={a!r}")
    if x < 0.0:
        raise DomainError(f"regularized_lower_gamma requires x >= 0, got x={x!r}")
    if x == 0.0:
        return 0.0
    p = math.exp(_log_lower_gamma(a, x) - math.lgamma(a))
    return min(p, 1.0)


def log_scaled_lower_gamma(a: float, x: float, beta: float) -> float:
    """log(beta^(-a) * gamma_low(a, beta*x)), continuous down to beta = 0.

    Equals log(integral_0^x u^(a-1) e^(-beta*u) du); at beta = 0 this is the
    limit log(x^a / a).  Stable for any beta >= 0 because beta only enters
    through z = beta*x:

        z <  a+1:  a*log(x) - z + log(S(a, z))
        z >= a+1:  a*log(x) - a*log(z) + log(gamma_low(a, z))
    """
    if a <= 0.0:
        raise DomainError(f"log_scaled_lower_gamma requires a > 0, got a={a!r}")
    if x <= 0.0:
        raise DomainError(f"log_scaled_lower_gamma requires x > 0, got x={x!r}")
    if beta < 0.0:
        raise DomainError(f"log_scaled_lower_gamma requires beta >= 0, got beta={beta!r}")
    z = beta * x
    if z < a + 1.0:
        return a * math.log(x) - z + _lower_series_log_sum(a, z)
    return a * (math.log(x) - math.log(z)) + _log_lower_gamma(a, z)
