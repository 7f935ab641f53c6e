"""Certified summation of exact rational term streams.

Three tail shapes cover every transformed series in the catalog:

* geometric -- successive ratios settle below 0.9; the tail is bounded by
  a geometric majorant built from the observed ratios.
* alternating_accelerated -- strictly alternating terms whose magnitudes
  decay like a power of k.  Summed with the Cohen-Villegas-Zagier
  weights, which are integers, so the accelerated sum stays an exact
  rational.  The error bound a_0 / d_n holds when the magnitudes form a
  completely monotone sequence, which is checked on the observed terms.
* powerlaw_monotone -- one-signed terms ~ c k^(-p) with p a half-integer
  above 1.  Partial sums at square cutoffs N = m^2 are Richardson
  extrapolated in powers of N^(-1/2), again with rational weights; the
  bound is twice the gap between the top two extrapolation orders.

Bounds for the last two shapes rest on empirically checked hypotheses,
not proofs.  ``direct`` summation with the raw bounds is the fallback.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from enum import Enum
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .errors import (
    BudgetExceededError,
    StrategyHypothesisError,
    UnclassifiableTailError,
)

__all__ = [
    "DEFAULT_MAX_TERMS",
    "SumResult",
    "SummationStrategy",
    "TermStream",
    "classify_tail",
    "powerlaw_exponent",
    "sum_series",
]

DEFAULT_MAX_TERMS = 10**6
GEOMETRIC_RATIO_LIMIT = 0.9
MIN_CLASSIFY_TERMS = 16
CLASSIFY_WINDOW = 24
RICHARDSON_MAX_ORDER = 6
HALF_STEP_MAX_ORDER = 10
STALL_CUTOFFS = 4
MONOTONE_CHECK_ORDER = 6
ALTERNATING_OFFSETS = (0, 8, 16, 32, 64, 128, 256, 512)
ALTERNATING_CHECK = 128
FIXED_POINT_BITS = 256


class SummationStrategy(str, Enum):
    GEOMETRIC = "geometric"
    ALTERNATING_ACCELERATED = "alternating_accelerated"
    POWERLAW_MONOTONE = "powerlaw_monotone"
    DIRECT = "direct"

    def __str__(self) -> str:
        return self.value


class SumResult(NamedTuple):
    partial: Fraction
    tail_bound: float
    terms_used: int


class TermStream:
    """Memoizing wrapper around ``k -> Fraction`` for k = 0, 1, 2, ..."""

    def __init__(self, func: Callable[[int], Fraction] | Sequence):
        if callable(func):
            self._func = func
            self._values: list[Fraction] = []
        else:
            self._func = None
            self._values = [Fraction(v) for v in func]

    def __getitem__(self, k: int) -> Fraction:
        values = self._values
        if k >= len(values):
            if self._func is None:
                raise IndexError(f"finite term list has no index {k}")
            for j in range(len(values), k + 1):
                values.append(Fraction(self._func(j)))
        return values[k]

    def head(self, n: int) -> list[Fraction]:
        return [self[k] for k in range(n)]


def log_abs(x: Fraction) -> float:
    """log |x| without overflowing or underflowing through float(x)."""
    return math.log(abs(x.numerator)) - math.log(x.denominator)


def _as_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def powerlaw_exponent(terms: Sequence, k0: int = 0) -> float:
    """Least-squares slope p of log|t_k| ~ -p log k over the given terms.

    ``terms[i]`` is taken to be t_(k0 + i); indices are shifted by one so
    that k = 0 is usable.
    """
    ks = np.arange(k0, k0 + len(terms), dtype=float) + 1.0
    logs = np.array([log_abs(_as_fraction(t)) for t in terms])
    slope = np.polyfit(np.log(ks), logs, 1)[0]
    return float(-slope)


def _ratios(window: Sequence[Fraction]) -> np.ndarray:
    logs = np.array([log_abs(t) for t in window])
    return np.exp(np.diff(logs))


def _strictly_alternating(window: Sequence[Fraction]) -> bool:
    return all((a > 0) != (b > 0) for a, b in zip(window, window[1:]))


def _one_signed(window: Sequence[Fraction]) -> bool:
    return all(t > 0 for t in window) or all(t < 0 for t in window)


def _half_integer(p: float, slack: float = 0.2) -> float | None:
    rounded = round(2.0 * p) / 2.0
    return rounded if abs(p - rounded) < slack else None


def classify_tail(terms: Sequence) -> SummationStrategy:
    """Pick a summation strategy from the first few signed terms."""
    values = [_as_fraction(t) for t in terms]
    while values and values[-1] == 0:
        values.pop()
    # only the trailing window is examined; earlier terms may be irregular
    k0 = max(0, len(values) - CLASSIFY_WINDOW)
    window = values[k0:]
    if len(window) < MIN_CLASSIFY_TERMS or any(v == 0 for v in window):
        raise ValueError(f"classify_tail needs at least {MIN_CLASSIFY_TERMS} trailing nonzero terms")
    ratios = _ratios(window)
    if np.percentile(ratios[-8:], 90) < GEOMETRIC_RATIO_LIMIT:
        return SummationStrategy.GEOMETRIC
    p = powerlaw_exponent(window[-8:], k0 + len(window) - 8)
    if _strictly_alternating(window) and p > 0.0:
        return SummationStrategy.ALTERNATING_ACCELERATED
    rounded = _half_integer(p)
    if _one_signed(window) and rounded is not None and rounded > 1.0:
        return SummationStrategy.POWERLAW_MONOTONE
    raise UnclassifiableTailError(
        f"terms fit no tail shape (last ratio {ratios[-1]:.4g}, slope {-p:.3g})")


def sum_series(terms, strategy: SummationStrategy | str, tol: float,
               max_terms: int = DEFAULT_MAX_TERMS) -> SumResult:
    """Sum ``terms`` (callable k -> Fraction, or a sequence) to within ``tol``.

    Raises BudgetExceededError, carrying the best partial sum and its bound,
    when ``max_terms`` terms do not suffice, and StrategyHypothesisError
    when the observed terms contradict the chosen strategy.
    """
    if not tol > 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    if max_terms < 1:
        raise ValueError(f"max_terms must be >= 1, got {max_terms}")
    stream = terms if isinstance(terms, TermStream) else TermStream(terms)
    strategy = SummationStrategy(strategy)
    if strategy is SummationStrategy.GEOMETRIC:
        return _sum_geometric(stream, tol, max_terms)
    if strategy is SummationStrategy.ALTERNATING_ACCELERATED:
        return _sum_alternating(stream, tol, max_terms)
    if strategy is SummationStrategy.POWERLAW_MONOTONE:
        return _sum_powerlaw(stream, tol, max_terms)
    return _sum_direct(stream, tol, max_terms)


# geometric ------------------------------------------------------------------


def _geometric_ratio(window: Sequence[Fraction]) -> float:
    """Majorant for the ratios still to come, from the last 8 observed."""
    ratios = _ratios(window)[-8:]
    r = float(np.percentile(ratios, 90))
    # ratios still creeping upward: extend the trend once more
    trend = max(0.0, float(ratios[-1] - ratios[0]))
    return max(r, float(ratios[-1]) + trend)


def _sum_geometric(stream: TermStream, tol: float, max_terms: int) -> SumResult:
    partial = Fraction(0)
    n = 0
    bound = math.inf
    while n < max_terms:
        partial += stream[n]
        n += 1
        if n < 9:
            continue
        window = [stream[k] for k in range(n - 9, n)]
        if any(t == 0 for t in window):
            continue
        r = _geometric_ratio(window)
        if r >= GEOMETRIC_RATIO_LIMIT:
            raise StrategyHypothesisError(f"ratio majorant {r:.4g} not below {GEOMETRIC_RATIO_LIMIT}")
        bound = math.exp(log_abs(window[-1])) * r / (1.0 - r)
        if bound <= tol:
            return SumResult(partial, bound, n)
    raise BudgetExceededError(f"geometric tail bound {bound:.3g} > {tol:g} after {n} terms",
                              partial=partial, tail_bound=bound, terms_used=n)


# alternating, Cohen-Villegas-Zagier ------------------------------------------

_CVZ_BASE = 3.0 + math.sqrt(8.0)


def _chebyshev_t3(n: int) -> int:
    """T_n(3) = ((3+sqrt 8)^n + (3-sqrt 8)^n) / 2, an integer."""
    prev, cur = 1, 3
    if n == 0:
        return 1
    for _ in range(n - 1):
        prev, cur = cur, 6 * cur - prev
    return cur


def cvz_sum(magnitudes: Sequence[Fraction]) -> tuple[Fraction, int]:
    """Accelerated value of sum (-1)^k a_k from a_0..a_(n-1); returns (value, d_n)."""
    n = len(magnitudes)
    d = _chebyshev_t3(n)
    b = Fraction(-1)
    c = Fraction(-d)
    s = Fraction(0)
    for k, a in enumerate(magnitudes):
        c = b - c
        s += c * a
        b = b * (2 * (k + n) * (k - n)) / ((2 * k + 1) * (k + 1))
    return s / d, d


def _completely_monotone(mags: Sequence[Fraction], order: int) -> bool:
    diffs = list(mags)
    for j in range(1, order + 1):
        diffs = [a - b for a, b in zip(diffs, diffs[1:])]
        if not diffs or any(d <= 0 for d in diffs):
            return False
    return True


def _sum_alternating(stream: TermStream, tol: float, max_terms: int) -> SumResult:
    # a few irregular leading terms are summed exactly and the rest accelerated
    reason = "no offset tried"
    for offset in ALTERNATING_OFFSETS:
        if offset >= max_terms:
            break
        try:
            value, bound, n = _alternating_from(stream, offset, tol, max_terms - offset)
        except StrategyHypothesisError as exc:
            reason = str(exc)
            continue
        head = sum((stream[k] for k in range(offset)), Fraction(0))
        return SumResult(head + value, bound, offset + n)
    raise StrategyHypothesisError(reason)


def _alternating_from(stream: TermStream, offset: int, tol: float,
                      max_terms: int) -> tuple[Fraction, float, int]:
    a0 = abs(stream[offset])
    if a0 == 0:
        raise StrategyHypothesisError("leading term is zero")
    # |S - A_n| <= S / d_n <= a_0 / d_n for moment sequences, and d_n >= base^n / 2
    n = max(1, math.ceil(math.log(2.0 * float(a0) / tol) / math.log(_CVZ_BASE)))
    while True:
        # a longer run A_m cross-checks A_n: a difference of moment sequences
        # (opposite-signed combinations) can pass the finite monotonicity test
        # yet exceed a_0 / d_n
        m = n + max(4, n // 4)
        if m > max_terms:
            raise _budget_error(f"accelerated sum needs {m} terms", stream, max_terms)
        check = min(max(m + 1, ALTERNATING_CHECK), max_terms)
        signed = [stream[offset + k] for k in range(max(check, m + 1))]
        if not _strictly_alternating(signed):
            raise StrategyHypothesisError("terms do not strictly alternate")
        mags = [abs(t) for t in signed]
        if not all(a > b for a, b in zip(mags, mags[1:])):
            raise StrategyHypothesisError("magnitudes are not decreasing")
        if not _completely_monotone(mags[:CLASSIFY_WINDOW], MONOTONE_CHECK_ORDER):
            raise StrategyHypothesisError("magnitudes are not completely monotone")
        sign = 1 if signed[0] > 0 else -1
        short, d = cvz_sum(mags[:n])
        value = sign * cvz_sum(mags[:m])[0]
        bound = max(float(a0 / d), abs(float(sign * short - value)))
        if bound <= tol:
            break
        n += max(1, math.ceil(math.log(bound / tol) / math.log(_CVZ_BASE)))
    # true sum lies between consecutive partial sums
    s_prev = sum(signed[: m - 1], Fraction(0))
    s_next = s_prev + signed[m - 1]
    lo, hi = min(s_prev, s_next), max(s_prev, s_next)
    if not lo - Fraction(bound) <= value <= hi + Fraction(bound):
        raise StrategyHypothesisError("accelerated value escapes the partial-sum bracket")
    return value, bound, m


# power law, Richardson at square cutoffs ----------------------------------------


def square_schedule(max_terms: int) -> list[int]:
    """Cutoffs N = m^2 with m growing by about sqrt(2) per step."""
    out: list[int] = []
    j = 0
    while True:
        m = round(4.0 * 2.0 ** (j / 2.0))
        j += 1
        if m * m > max_terms:
            return out
        if not out or m * m > out[-1]:
            out.append(m * m)


def _solve_exact(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    n = len(rhs)
    m = [row[:] + [v] for row, v in zip(rows, rhs)]
    for i in range(n):
        pivot = next(r for r in range(i, n) if m[r][i] != 0)
        m[i], m[pivot] = m[pivot], m[i]
        for r in range(n):
            if r != i and m[r][i] != 0:
                f = m[r][i] / m[i][i]
                m[r] = [x - f * y for x, y in zip(m[r], m[i])]
    return [m[i][n] / m[i][i] for i in range(n)]


def richardson_limit(cutoffs: Sequence[int], partials: Sequence[Fraction],
                     p: float, order: int, step: float = 1.0) -> Fraction:
    """Limit S of S_N = S + sum_j c_j N^(-(p-1)-j*step), j < order, fit exactly.

    ``step`` is 1 or 1/2.  Cutoffs must be perfect squares so every power
    of N^(-1/2) is rational.
    """
    twice = round(2 * (p - 1))
    stride = round(2 * step)
    rows = []
    for n in cutoffs:
        m = math.isqrt(n)
        if m * m != n:
            raise ValueError(f"cutoff {n} is not a perfect square")
        rows.append([Fraction(1)] + [Fraction(1, m ** (twice + stride * j)) for j in range(order)])
    return _solve_exact(rows, list(partials))[0]


def _extrapolate(cutoffs, partials, p, step, max_order) -> tuple[Fraction, float]:
    order = min(len(cutoffs) - 1, max_order)
    top = richardson_limit(cutoffs[-order - 1:], partials[-order - 1:], p, order, step)
    lower = richardson_limit(cutoffs[-order:], partials[-order:], p, order - 1, step)
    bound = 2.0 * abs(float(top - lower))
    return top, max(bound, 4.0 * math.ulp(abs(float(top))))


def _sum_powerlaw(stream: TermStream, tol: float, max_terms: int) -> SumResult:
    schedule = square_schedule(max_terms)
    if len(schedule) < 4:
        raise _budget_error(f"budget {max_terms} too small for extrapolation",
                            stream, max_terms)
    first = [stream[k] for k in range(CLASSIFY_WINDOW)]
    if not _one_signed(first[8:]):
        raise StrategyHypothesisError("terms are not one-signed")
    cutoffs: list[int] = []
    partials: list[Fraction] = []
    partial = Fraction(0)
    k = 0
    best: tuple[Fraction, float, int] | None = None
    previous: tuple[Fraction, float] | None = None
    stalled = 0
    acc = 0
    for n in schedule:
        # exact rational partial sums grow lcm-sized denominators; a 256-bit
        # fixed point keeps them cheap and loses at most 2^-256 per term
        while k < n:
            term = stream[k]
            acc += (term.numerator << FIXED_POINT_BITS) // term.denominator
            k += 1
        partial = Fraction(acc, 1 << FIXED_POINT_BITS)
        cutoffs.append(n)
        partials.append(partial)
        if len(cutoffs) < 4:
            continue
        tail = [stream[j] for j in range(n - 8, n)]
        if not _one_signed(tail):
            raise StrategyHypothesisError("terms change sign")
        p = _half_integer(powerlaw_exponent(tail, n - 8))
        if p is None or p <= 1.0:
            raise StrategyHypothesisError("decay exponent is not a half-integer above 1")
        # integer steps fit a pure k^-p tail fastest; a mixture of integer and
        # half-integer decay needs half steps.  Trust the former only when the
        # two fits agree.
        top, bound = _extrapolate(cutoffs, partials, p, 1.0, RICHARDSON_MAX_ORDER)
        half_top, half_bound = _extrapolate(cutoffs, partials, p, 0.5, HALF_STEP_MAX_ORDER)
        if abs(float(top - half_top)) > bound + half_bound:
            top, bound = half_top, half_bound
        _check_tail_size(top - partial, tail[-1], n, p)
        # the previous estimate must sit within its own bound of this one;
        # catches early cutoffs polluted by a faster-decaying component
        consistent = previous is not None and abs(float(top - previous[0])) <= previous[1] + bound
        previous = (top, bound)
        bound += n * 2.0 ** -FIXED_POINT_BITS
        if bound <= tol and consistent:
            return SumResult(top, bound, n)
        if best is not None and bound >= best[1]:
            stalled += 1
            if stalled >= STALL_CUTOFFS:
                raise StrategyHypothesisError(
                    f"extrapolation stalled at bound {best[1]:.3g} after {n} terms")
        else:
            stalled = 0
            best = (top, bound, n)
    value, bound, n = best if best is not None else (partial, math.inf, k)
    raise BudgetExceededError(f"extrapolated tail bound {bound:.3g} > {tol:g} at {n} terms",
                              partial=value, tail_bound=bound, terms_used=n)


def _check_tail_size(tail: Fraction, last: Fraction, n: int, p: float) -> None:
    # extrapolated tail must share the terms' sign and roughly match c N^(1-p)/(p-1)
    integral = float(last) * n / (p - 1.0)
    t = float(tail)
    if t == 0.0 or (t > 0) != (integral > 0) or not 0.25 <= t / integral <= 4.0:
        raise StrategyHypothesisError(
            f"extrapolated tail {t:.3g} inconsistent with power-law estimate {integral:.3g}")


# direct summation with raw bounds ----------------------------------------------


def _budget_error(message: str, stream: TermStream, max_terms: int) -> BudgetExceededError:
    # strategy gave up before summing: report the plain partial sum instead
    partial = sum((stream[k] for k in range(max_terms)), Fraction(0))
    bound = _raw_bound(stream, max_terms)[0]
    return BudgetExceededError(message, partial=partial, tail_bound=bound, terms_used=max_terms)


def _raw_bound(stream: TermStream, n: int) -> tuple[float, float | None, str]:
    """(bound, decay exponent or None, shape) from the terms just before n."""
    window = [stream[k] for k in range(max(0, n - 9), n)]
    if len(window) < 9 or any(t == 0 for t in window):
        return math.inf, None, "unknown"
    ratios = _ratios(window)
    if float(np.percentile(ratios[-8:], 90)) < GEOMETRIC_RATIO_LIMIT:
        r = _geometric_ratio(window)
        if r < GEOMETRIC_RATIO_LIMIT:
            return math.exp(log_abs(window[-1])) * r / (1.0 - r), None, "geometric"
    p = powerlaw_exponent(window[-8:], n - 8)
    if _strictly_alternating(window) and np.all(ratios < 1.0):
        return math.exp(log_abs(stream[n])), p, "alternating"
    if _one_signed(window) and p > 1.0:
        c = max(math.exp(log_abs(t)) * (n - 8 + i + 1) ** p for i, t in enumerate(window[-8:]))
        return 2.0 * (2.0 * c * n ** (1.0 - p) / (p - 1.0)), p, "powerlaw"
    return math.inf, None, "unknown"


def _sum_direct(stream: TermStream, tol: float, max_terms: int) -> SumResult:
    partial = Fraction(0)
    n = 0
    checkpoint = 32
    bound = math.inf
    while n < max_terms:
        stop = min(checkpoint, max_terms)
        while n < stop:
            partial += stream[n]
            n += 1
        bound, p, shape = _raw_bound(stream, n)
        if bound <= tol:
            return SumResult(partial, bound, n)
        if p is not None and p > 0 and math.isfinite(bound):
            # predicted cutoff for the raw bound to reach tol
            power = p - 1.0 if shape == "powerlaw" else p
            if power > 0:
                needed = n * (bound / tol) ** (1.0 / power)
                if needed > max_terms:
                    raise BudgetExceededError(
                        f"direct summation needs about {needed:.3g} terms, budget {max_terms}",
                        partial=partial, tail_bound=bound, terms_used=n)
        checkpoint *= 2
    raise BudgetExceededError(f"direct tail bound {bound:.3g} > {tol:g} after {n} terms",
                              partial=partial, tail_bound=bound, terms_used=n)
