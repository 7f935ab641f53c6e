"""Exception hierarchy shared across the package."""

from __future__ import annotations

from fractions import Fraction


class WallisSeriesError(Exception):
    """Base class for all package errors."""


class UnknownSeriesError(WallisSeriesError, KeyError):
    def __init__(self, name: str):
        super().__init__(name)
        self.name = name

    def __str__(self) -> str:
        return f"unknown series identifier: {self.name!r}"


class DomainError(WallisSeriesError, ValueError):
    """Argument outside the domain where a closed form is finite."""


class NonConvergenceError(WallisSeriesError):
    """No summation strategy certified the tail within the term budget."""

    def __init__(self, message: str, partial: Fraction | None = None,
                 tail_bound: float = float("inf"), terms_used: int = 0):
        super().__init__(message)
        self.partial = partial
        self.tail_bound = tail_bound
        self.terms_used = terms_used


class BudgetExceededError(NonConvergenceError):
    """The term budget ran out before the tail bound reached the tolerance."""


class UnclassifiableTailError(WallisSeriesError):
    """Observed terms match none of the supported tail shapes."""


class StrategyHypothesisError(WallisSeriesError):
    """An empirical check behind a summation strategy failed."""


class QuadratureError(WallisSeriesError):
    """Integrand produced a non-finite sample at an interior node."""
