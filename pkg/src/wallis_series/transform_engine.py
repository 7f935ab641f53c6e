"""Integral of f(sin x) over [0, pi/2] from the Maclaurin coefficients of f.

Substituting sin x into f(x) = sum a_k x^k and integrating term by term
leaves one Wallis integral per power:

    even powers:  a_(2k) * wallis_even_ratio(k) * pi/2
    odd powers:   a_(2k+1) * wallis_odd_ratio(k)

so the answer has the shape odd_part + even_part * pi/2 with both parts
rational.  The same value is the integral of f(cos x).
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NonConvergenceError, StrategyHypothesisError, UnclassifiableTailError
from .exact_core import WallisTable, default_table
from .streams import CoefficientStream
from .summation import (
    DEFAULT_MAX_TERMS,
    MIN_CLASSIFY_TERMS,
    SummationStrategy,
    TermStream,
    classify_tail,
    sum_series,
)

__all__ = [
    "PiLinearValue",
    "integrate",
    "integrate_even",
    "integrate_mixed",
    "integrate_odd",
    "transformed_terms",
]

log = logging.getLogger(__name__)

HALF_PI = math.pi / 2
CLASSIFY_TERMS = 32
CLASSIFY_HORIZONS = (32, 128, 512)
BLOCK_SIZES = (1, 2, 4)
LEADING_ZEROS = 8


@dataclass(frozen=True)
class PiLinearValue:
    """odd_part + even_part * pi/2, plus a bound on the neglected tail."""

    odd_part: Fraction
    even_part: Fraction
    tail_bound: float
    terms_used: int
    strategy_used: str

    @property
    def value(self) -> float:
        return float(self.odd_part) + float(self.even_part) * HALF_PI

    def __float__(self) -> float:
        return self.value

    def __add__(self, other: PiLinearValue) -> PiLinearValue:
        if not isinstance(other, PiLinearValue):
            return NotImplemented
        if self.strategy_used == other.strategy_used:
            strategy = self.strategy_used
        else:
            strategy = f"{self.strategy_used}+{other.strategy_used}"
        return PiLinearValue(
            self.odd_part + other.odd_part,
            self.even_part + other.even_part,
            self.tail_bound + other.tail_bound,
            self.terms_used + other.terms_used,
            strategy,
        )

    def render(self, digits: int = 15) -> str:
        return f"{self.value:.{digits}g} ± {self.tail_bound:.2g}"


def transformed_terms(coeffs: CoefficientStream, parity: str,
                      table: WallisTable = default_table):
    """k -> a_(2k) W_even(k) or a_(2k+1) W_odd(k)."""
    if parity == "even":
        return lambda k: coeffs(2 * k) * table.even(k)
    if parity == "odd":
        return lambda k: coeffs(2 * k + 1) * table.odd(k)
    raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")


def _check_parity(coeffs: CoefficientStream, parity: str, probe: int = 32) -> None:
    if coeffs.parity == parity:
        return
    wrong = 1 if parity == "even" else 0
    limit = probe if coeffs.degree is None else coeffs.degree + 1
    for k in range(wrong, limit, 2):
        if coeffs(k) != 0:
            raise ValueError(f"{coeffs!r} has nonzero coefficient a_{k}; not an {parity} stream")


def _blocked(terms: TermStream, size: int, start: int = 0) -> TermStream:
    if size == 1 and start == 0:
        return terms
    return TermStream(lambda k: sum((terms[start + size * k + i] for i in range(size)),
                                    Fraction(0)))


def _block_sizes(terms: TermStream) -> list[int]:
    """Block lengths worth trying, smallest first.

    Linear combinations can cancel every other transformed term (sec - sech
    does) or interleave two tail shapes (2 artanh - arctan); sums of adjacent
    terms restore a tail the strategies recognise.  Sizes whose block sums
    still vanish past the first few are skipped.
    """
    return [size for size in BLOCK_SIZES
            if all(t != 0 for t in _blocked(terms, size).head(CLASSIFY_TERMS)[LEADING_ZEROS:])]


def _split_head(terms: TermStream, size: int) -> tuple[Fraction, int, TermStream]:
    # zeros near the front (cancelled leading coefficients) are summed exactly
    # and skipped so the strategies see a clean start
    blocks = _blocked(terms, size)
    start = max((i + 1 for i, t in enumerate(blocks.head(LEADING_ZEROS)) if t == 0), default=0)
    lead = sum((blocks[i] for i in range(start)), Fraction(0))
    return lead, start, _blocked(terms, size, start * size)


def _attempt(terms: TermStream, size: int, strategy: SummationStrategy | None, tol: float,
             max_terms: int, horizon: int = CLASSIFY_TERMS) -> tuple[Fraction, float, int, str]:
    lead, start, tail = _split_head(terms, size)
    if strategy is None:
        head = tail.head(horizon)
        if sum(1 for t in head if t != 0) < MIN_CLASSIFY_TERMS:
            raise UnclassifiableTailError("too few nonzero terms to classify")
        strategy = classify_tail(head)
    try:
        partial, bound, used = sum_series(tail, strategy, tol, max(1, max_terms // size - start))
    except NonConvergenceError as exc:
        if exc.partial is not None:
            exc.partial += lead
        exc.terms_used = (exc.terms_used + start) * size
        raise
    return lead + partial, bound, (used + start) * size, SummationStrategy(strategy).value


def _sum_transformed(coeffs: CoefficientStream, parity: str, tol: float, max_terms: int,
                     strategy: SummationStrategy | str | None) -> tuple[Fraction, float, int, str]:
    if not tol > 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    terms = TermStream(transformed_terms(coeffs, parity))
    if coeffs.degree is not None:
        # finite stream: the sum is exact
        shift = 0 if parity == "even" else 1
        count = max(0, (coeffs.degree - shift) // 2 + 1)
        total = sum((terms[k] for k in range(count)), Fraction(0))
        return total, 0.0, count, "exact"
    if all(t == 0 for t in terms.head(CLASSIFY_TERMS)):
        raise NonConvergenceError(
            f"first {CLASSIFY_TERMS} transformed terms vanish; no tail bound is possible",
            partial=Fraction(0), tail_bound=math.inf, terms_used=CLASSIFY_TERMS)
    sizes = _block_sizes(terms) or [1]
    if strategy is not None:
        strategy = SummationStrategy(strategy)
        sizes = sizes[:1]
    # classify from the first terms; if the shape there misleads (a coefficient
    # crossing zero, say), look further out before giving up
    horizons = [h for h in CLASSIFY_HORIZONS if h <= max_terms] or [CLASSIFY_TERMS]
    if strategy is not None:
        horizons = horizons[:1]
    for horizon in horizons:
        for size in sizes:
            try:
                return _attempt(terms, size, strategy, tol, max_terms, horizon)
            except (UnclassifiableTailError, StrategyHypothesisError, ValueError) as exc:
                log.info("block size %d, horizon %d: %s", size, horizon, exc)
    if strategy is SummationStrategy.DIRECT:
        raise StrategyHypothesisError("direct summation rejected the stream")
    log.info("falling back to direct summation")
    return _attempt(terms, sizes[0], SummationStrategy.DIRECT, tol, max_terms)


def integrate_even(coeffs: CoefficientStream, tol: float, *, max_terms: int = DEFAULT_MAX_TERMS,
                   strategy: SummationStrategy | str | None = None) -> PiLinearValue:
    """Integral of f(sin x) over [0, pi/2] for an even f, as a multiple of pi/2."""
    _check_parity(coeffs, "even")
    # tolerance applies to the rendered value, i.e. after scaling by pi/2
    total, bound, used, name = _sum_transformed(coeffs, "even", tol / HALF_PI, max_terms, strategy)
    return PiLinearValue(Fraction(0), total, bound * HALF_PI, used, name)


def integrate_odd(coeffs: CoefficientStream, tol: float, *, max_terms: int = DEFAULT_MAX_TERMS,
                  strategy: SummationStrategy | str | None = None) -> PiLinearValue:
    """Integral of g(sin x) over [0, pi/2] for an odd g; the result is rational."""
    _check_parity(coeffs, "odd")
    total, bound, used, name = _sum_transformed(coeffs, "odd", tol, max_terms, strategy)
    return PiLinearValue(total, Fraction(0), bound, used, name)


def integrate_mixed(coeffs: CoefficientStream, tol: float, *,
                    max_terms: int = DEFAULT_MAX_TERMS) -> PiLinearValue:
    """General f: even and odd halves summed separately at tol/2 each."""
    if not tol > 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    even = integrate_even(coeffs.even_part(), tol / 2, max_terms=max_terms)
    odd = integrate_odd(coeffs.odd_part(), tol / 2, max_terms=max_terms)
    return even + odd


def integrate(coeffs: CoefficientStream, tol: float, *, max_terms: int = DEFAULT_MAX_TERMS,
              strategy: SummationStrategy | str | None = None) -> PiLinearValue:
    """Dispatch on the stream's declared parity."""
    if coeffs.parity == "even":
        return integrate_even(coeffs, tol, max_terms=max_terms, strategy=strategy)
    if coeffs.parity == "odd":
        return integrate_odd(coeffs, tol, max_terms=max_terms, strategy=strategy)
    return integrate_mixed(coeffs, tol, max_terms=max_terms)
