import math
from fractions import Fraction

import mpmath
import pytest

from wallis_series.errors import (
    BudgetExceededError,
    StrategyHypothesisError,
    UnclassifiableTailError,
)
from wallis_series.series_catalog import catalog_lookup
from wallis_series.summation import (
    SummationStrategy,
    classify_tail,
    richardson_limit,
    square_schedule,
    sum_series,
)
from wallis_series.transform_engine import transformed_terms

CATALAN = float(mpmath.catalan)


def app_terms(name):
    stream = catalog_lookup(name).stream()
    return transformed_terms(stream, stream.parity)


def test_geometric_fast():
    r = Fraction(1 / math.pi**2)
    res = sum_series(lambda k: r**k, SummationStrategy.GEOMETRIC, 1e-12)
    assert res.terms_used <= 25
    exact = 1 / (1 - 1 / math.pi**2)
    assert abs(float(res.partial) - exact) <= res.tail_bound + 1e-15


def test_alternating_catalan():
    res = sum_series(lambda k: Fraction((-1) ** k, (2 * k + 1) ** 2),
                     SummationStrategy.ALTERNATING_ACCELERATED, 1e-8)
    assert res.tail_bound <= 1e-8
    assert abs(float(res.partial) - CATALAN) <= res.tail_bound
    assert res.terms_used < 30


def test_powerlaw_pi_squared_over_eight():
    res = sum_series(lambda k: Fraction(1, (2 * k + 1) ** 2), "powerlaw_monotone", 1e-10)
    assert res.tail_bound <= 1e-10
    assert abs(float(res.partial) - math.pi**2 / 8) <= res.tail_bound


def test_powerlaw_artanh_terms():
    res = sum_series(app_terms("artanh"), SummationStrategy.POWERLAW_MONOTONE, 1e-6)
    assert abs(float(res.partial) - 2 * CATALAN) <= res.tail_bound <= 1e-6
    assert res.terms_used < 2000


def test_direct_finite_exact_tail():
    res = sum_series(lambda k: Fraction(1, 3**k), "direct", 1e-9, max_terms=10**4)
    assert float(Fraction(3, 2) - res.partial) <= res.tail_bound <= 1e-9


def test_budget_exceeded_carries_partial():
    with pytest.raises(BudgetExceededError) as info:
        sum_series(lambda k: Fraction(1, (2 * k + 1) ** 2), "direct", 1e-10, max_terms=100)
    err = info.value
    assert err.partial is not None and err.terms_used <= 100
    assert 1.1 < float(err.partial) < math.pi**2 / 8
    assert err.tail_bound > 1e-10


def test_wrong_hypothesis_detected():
    with pytest.raises(StrategyHypothesisError):
        sum_series(lambda k: Fraction(1, (k + 1) ** 2), "alternating_accelerated", 1e-8)
    with pytest.raises(StrategyHypothesisError):
        sum_series(lambda k: Fraction(1, 2**k), "powerlaw_monotone", 1e-8)


@pytest.mark.parametrize("name,expected", [
    ("x_cot_x", SummationStrategy.GEOMETRIC),
    ("arctan", SummationStrategy.ALTERNATING_ACCELERATED),
    ("artanh", SummationStrategy.POWERLAW_MONOTONE),
    ("arcsin", SummationStrategy.POWERLAW_MONOTONE),
    ("cosh", SummationStrategy.GEOMETRIC),
])
def test_classify_application_tails(name, expected):
    terms = app_terms(name)
    assert classify_tail([terms(k) for k in range(32)]) == expected


def test_classify_rejects_short_or_harmonic():
    with pytest.raises(ValueError):
        classify_tail([Fraction(1, k + 1) for k in range(5)])
    with pytest.raises(UnclassifiableTailError):
        classify_tail([Fraction(1, k + 1) for k in range(32)])


def test_richardson_recovers_exact_model():
    cutoffs = [16, 36, 64]
    partials = [3 + Fraction(2, n) - Fraction(7, n * n) for n in cutoffs]
    assert richardson_limit(cutoffs, partials, 2.0, 2) == 3
    with pytest.raises(ValueError):
        richardson_limit([15, 36, 64], partials, 2.0, 2)


def test_square_schedule():
    sched = square_schedule(10**6)
    assert all(math.isqrt(n) ** 2 == n for n in sched)
    assert sched == sorted(set(sched)) and sched[-1] <= 10**6
    assert square_schedule(10) == []


def test_bad_arguments():
    with pytest.raises(ValueError):
        sum_series(lambda k: Fraction(1), "direct", 0.0)
    with pytest.raises(ValueError):
        sum_series(lambda k: Fraction(1), "direct", 1e-3, max_terms=0)
    with pytest.raises(ValueError):
        sum_series(lambda k: Fraction(1), "nosuch", 1e-3)
