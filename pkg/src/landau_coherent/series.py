"""Overflow-safe summation of series whose terms are kept in log form.

The sums that appear throughout this package have terms like
``x**n / n! * exp(-(n + 1/2)**2)`` with ``x`` as large as ``25 * e**50``.
Individual terms and the final sum are representable, but any naive
evaluation of ``x**n`` overflows long before the gaussian damping wins.
Terms are therefore carried as a log-magnitude plus a unit phase, and the
accumulator is rescaled by the running maximum log-magnitude so that no
intermediate quantity ever leaves the float range.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Union

from .errors import NonConvergent, TermCapExceeded

_NEG_INF = float("-inf")

# Consecutive sub-tolerance terms required before the tail is declared dead.
# Two-sided sums fed in center-out order interleave a fast and a slow branch,
# so a single small term is not yet evidence of convergence.
_STOP_STREAK = 2


@dataclass(frozen=True)
class SeriesConfig:
    """Tolerance and safety cap shared by every series evaluation."""

    rel_tol: float = 1e-14
    max_terms: int = 10_000

    def __post_init__(self):
        if not (0.0 < self.rel_tol < 1.0):
            raise ValueError(f"rel_tol must lie in (0, 1), got {self.rel_tol}")
        if self.max_terms < 1:
            raise ValueError(f"max_terms must be at least 1, got {self.max_terms}")


DEFAULT_CONFIG = SeriesConfig()


@dataclass(frozen=True)
class LogTerm:
    """One series term, stored as log|t| and t/|t|.

    ``sign_or_phase`` has unit modulus, except for the exact zero term which
    is encoded as ``log_magnitude=-inf`` with ``sign_or_phase=0``.
    """

    log_magnitude: float
    sign_or_phase: complex

    @classmethod
    def zero(cls) -> "LogTerm":
        return cls(_NEG_INF, 0j)

    @classmethod
    def from_real(cls, log_magnitude: float, negative: bool = False) -> "LogTerm":
        if log_magnitude == _NEG_INF:
            return cls.zero()
        return cls(log_magnitude, (-1 + 0j) if negative else (1 + 0j))

    @property
    def is_zero(self) -> bool:
        return self.log_magnitude == _NEG_INF


class _CompensatedSum:
    """Kahan-compensated accumulator; works componentwise on complex values."""

    __slots__ = ("total", "_carry")

    def __init__(self):
        self.total = 0j
        self._carry = 0j

    def add(self, value: complex) -> None:
        value = value + self._carry
        previous = self.total
        self.total = previous + value
        self._carry = value - (self.total - previous)

    def rescale(self, factor: float) -> None:
        self.total *= factor
        self._carry *= factor


def sum_log_terms_scaled(terms: Iterable[LogTerm],
                         cfg: SeriesConfig = DEFAULT_CONFIG) -> tuple[complex, float]:
    """Sum a stream of log-form terms, returning ``(coefficient, log_scale)``.

    The mathematical sum is ``coefficient * exp(log_scale)``.  Keeping the
    scale separate lets callers form ratios of huge sums without overflow.

    The stream must be ordered so magnitudes rise to a single peak and then
    decay (flat stretches and interleaved two-sided tails are fine).  After
    the peak has passed, summation stops once ``_STOP_STREAK`` consecutive
    terms fall below ``rel_tol`` times the accumulated sum.  A stream that
    simply ends is treated as a complete finite sum.

    Raises
    ------
    NonConvergent
        More than ``max_terms`` terms arrived and magnitudes never started
        to decrease.
    TermCapExceeded
        More than ``max_terms`` terms arrived after the peak without the
        tail dropping below tolerance.
    """
    acc = _CompensatedSum()
    scale = _NEG_INF
    prev_mag = None
    past_peak = False
    below_streak = 0
    count = 0

    for term in terms:
        count += 1
        if count > cfg.max_terms:
            if past_peak:
                raise TermCapExceeded(
                    f"series did not meet rel_tol={cfg.rel_tol} "
                    f"within {cfg.max_terms} terms")
            raise NonConvergent(
                f"term magnitudes still rising after {cfg.max_terms} terms")

        mag = term.log_magnitude
        if prev_mag is not None and mag < prev_mag:
            past_peak = True
        prev_mag = mag

        if term.is_zero:
            # Contributes nothing, but counts toward the stop streak.
            if past_peak:
                below_streak += 1
                if below_streak >= _STOP_STREAK:
                    break
            continue

        if mag > scale:
            acc.rescale(math.exp(scale - mag) if scale != _NEG_INF else 0.0)
            scale = mag
        rescaled = math.exp(mag - scale)
        acc.add(term.sign_or_phase * rescaled)

        if past_peak:
            if rescaled < cfg.rel_tol * abs(acc.total):
                below_streak += 1
                if below_streak >= _STOP_STREAK:
                    break
            else:
                below_streak = 0

    if scale == _NEG_INF:
        return 0j, 0.0
    return acc.total, scale


def sum_log_terms(terms: Iterable[LogTerm],
                  cfg: SeriesConfig = DEFAULT_CONFIG) -> Union[float, complex]:
    """Sum a stream of log-form terms and return the plain value.

    The result is a float when every contributing phase is real.  The final
    ``exp`` can overflow for sums beyond roughly ``exp(709)``; the scaled
    variant never does.
    """
    coefficient, log_scale = sum_log_terms_scaled(terms, cfg)
    value = coefficient * math.exp(log_scale)
    if value.imag == 0.0:
        return value.real
    return value


def sum_ratio(numerator: Iterable[LogTerm], denominator: Iterable[LogTerm],
              cfg: SeriesConfig = DEFAULT_CONFIG) -> complex:
    """Evaluate sum(numerator)/sum(denominator) without forming either sum."""
    num_c, num_s = sum_log_terms_scaled(numerator, cfg)
    den_c, den_s = sum_log_terms_scaled(denominator, cfg)
    return (num_c / den_c) * math.exp(num_s - den_s)
