"""Integrals of f(sin x) over [0, pi/2] from the Maclaurin coefficients of f.

Each power of sin x integrates to a Wallis ratio, so a series for f turns
into a series of rationals (times pi/2 for the even powers).  The package
sums those series exactly where it can and with a certified tail bound
otherwise, and checks the results against tanh-sinh quadrature.
"""

from .errors import (
    BudgetExceededError,
    DomainError,
    NonConvergenceError,
    QuadratureError,
    StrategyHypothesisError,
    UnclassifiableTailError,
    UnknownSeriesError,
    WallisSeriesError,
)
from .exact_core import BigRational, WallisTable, double_factorial, wallis_even_ratio, wallis_odd_ratio
from .number_sequences import bernoulli_positive, bernoulli_table, euler_positive, euler_table
from .quadrature import QuadratureResult, integrate_de, oracle_integral
from .series_catalog import SeriesSpec, catalog_lookup, catalog_names, coefficient, direct_eval
from .streams import CoefficientStream
from .summation import SumResult, SummationStrategy, classify_tail, sum_series
from .transform_engine import PiLinearValue, integrate, integrate_even, integrate_mixed, integrate_odd
from .verification import APPLICATIONS, VerificationReport, run_all, run_application

__version__ = "0.1.0"

__all__ = [
    "APPLICATIONS",
    "BigRational",
    "BudgetExceededError",
    "CoefficientStream",
    "DomainError",
    "NonConvergenceError",
    "PiLinearValue",
    "QuadratureError",
    "QuadratureResult",
    "SeriesSpec",
    "StrategyHypothesisError",
    "SumResult",
    "SummationStrategy",
    "UnclassifiableTailError",
    "UnknownSeriesError",
    "VerificationReport",
    "WallisSeriesError",
    "WallisTable",
    "bernoulli_positive",
    "bernoulli_table",
    "catalog_lookup",
    "catalog_names",
    "classify_tail",
    "coefficient",
    "direct_eval",
    "double_factorial",
    "euler_positive",
    "euler_table",
    "integrate",
    "integrate_de",
    "integrate_even",
    "integrate_mixed",
    "integrate_odd",
    "oracle_integral",
    "run_all",
    "run_application",
    "sum_series",
    "wallis_even_ratio",
    "wallis_odd_ratio",
]
