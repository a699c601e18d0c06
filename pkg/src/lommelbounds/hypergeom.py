"""Direct summation of the generalized hypergeometric series 1F2 and 2F3.

Terms are produced by the running ratio recurrence (one multiply-divide per
term) rather than per-term gamma evaluations, and accumulated with
compensated (Neumaier) summation: argument z runs up to x^2/4 = 2500 in the
tabulated range, where naive accumulation loses digits.

The stopping rule refuses to test term size against the partial sum until
the term-magnitude peak has passed (the running ratio has dropped below 1
in absolute value); for large z the early terms grow for ~sqrt(z) steps and
a premature relative test would stop at the foot of the hill.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import ConvergenceError, DomainError, GammaPoleError
from .special import _is_nonpositive_integer

DEFAULT_TOL = 1e-12
MAX_TERMS = 100_000


@dataclass(frozen=True)
class SeriesEval:
    """A summed series value with convergence diagnostics.

    ``truncation_estimate`` bounds the absolute tail (twice the magnitude of
    the last included term); ``converged`` is True when the stopping rule
    was met before the term cap.
    """

    value: float
    terms_used: int
    truncation_estimate: float
    converged: bool


class _NeumaierSum:
    """Compensated accumulator; error <= 2 ulp per added term."""

    __slots__ = ("high", "low")

    def __init__(self, first: float = 0.0):
        self.high = first
        self.low = 0.0

    def add(self, v: float) -> None:
        t = self.high + v
        if abs(self.high) >= abs(v):
            self.low += (self.high - t) + v
        else:
            self.low += (v - t) + self.high
        self.high = t

    def total(self) -> float:
        return self.high + self.low


def _check_tol(tol: float) -> None:
    if not (0.0 < tol <= 1e-3):
        raise DomainError(f"tol must lie in (0, 1e-3], got {tol!r}")


def _check_denominator_params(bs: Sequence[float]) -> None:
    for b in bs:
        if _is_nonpositive_integer(b):
            raise GammaPoleError(
                f"denominator parameter {b!r} is a non-positive integer"
            )


def _sum_series(nums: Sequence[float], dens: Sequence[float], z: float,
                tol: float, max_terms: int) -> SeriesEval:
    """Sum pFq with numerator params ``nums`` and denominator params ``dens``.

    Term ratio: t_{k+1}/t_k = prod(a+k) / (prod(b+k) * (k+1)) * z.
    """
    _check_tol(tol)
    _check_denominator_params(dens)
    if z == 0.0:
        return SeriesEval(1.0, 1, 0.0, True)

    acc = _NeumaierSum(1.0)
    term = 1.0
    past_peak = False
    small_run = 0
    for k in range(max_terms):
        ratio = z
        for a in nums:
            ratio *= a + k
        for b in dens:
            ratio /= b + k
        ratio /= k + 1
        term *= ratio
        acc.add(term)
        if abs(ratio) <= 1.0:
            past_peak = True
        if past_peak and abs(term) <= 0.5 * tol * abs(acc.high):
            small_run += 1
            if small_run >= 3:
                return SeriesEval(acc.total(), k + 2, 2.0 * abs(term), True)
        else:
            small_run = 0
    raise ConvergenceError(
        f"hypergeometric series did not converge within {max_terms} terms "
        f"(z={z!r}, nums={tuple(nums)!r}, dens={tuple(dens)!r})"
    )


def hyp1F2(a1: float, b1: float, b2: float, z: float,
           tol: float = DEFAULT_TOL, max_terms: int = MAX_TERMS) -> SeriesEval:
    """1F2(a1; b1, b2; z) by direct summation."""
    return _sum_series((a1,), (b1, b2), z, tol, max_terms)


def hyp2F3(a1: float, a2: float, b1: float, b2: float, b3: float, z: float,
           tol: float = DEFAULT_TOL, max_terms: int = MAX_TERMS) -> SeriesEval:
    """2F3(a1, a2; b1, b2, b3; z) by direct summation."""
    return _sum_series((a1, a2), (b1, b2, b3), z, tol, max_terms)
