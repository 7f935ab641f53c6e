import math
from fractions import Fraction

import pytest

from oracles import bernoulli_positive_ref, euler_positive_ref, reference_series
from wallis_series.number_sequences import (
    bernoulli_positive,
    bernoulli_table,
    euler_positive,
    euler_table,
    zigzag_numbers,
)
from wallis_series.series_catalog import coefficient


def test_bernoulli_matches_recurrence():
    assert bernoulli_table(10) == bernoulli_positive_ref(10)
    assert bernoulli_positive(1) == Fraction(1, 6)
    assert bernoulli_positive(2) == Fraction(1, 30)


def test_euler_matches_secant_division():
    assert euler_table(10) == [int(e) for e in euler_positive_ref(10)]
    assert euler_table(4) == [1, 5, 61, 1385]


def test_zigzag_prefix():
    assert zigzag_numbers(8) == [1, 1, 1, 2, 5, 16, 61, 272, 1385]


def test_tan_coefficients_from_bernoulli():
    expected = [Fraction(1), Fraction(1, 3), Fraction(2, 15)]
    got = [coefficient("tan", 2 * j + 1) for j in range(3)]
    assert got == expected
    ref = reference_series("tan", 19)
    assert [coefficient("tan", k) for k in range(20)] == ref


def test_sec_coefficients_from_euler():
    expected = [Fraction(1), Fraction(1, 2), Fraction(5, 24)]
    assert [coefficient("sec", 2 * j) for j in range(3)] == expected
    ref = reference_series("sec", 19)
    assert [coefficient("sec", k) for k in range(20)] == ref


def test_bernoulli_asymptotic():
    # |B_2k| ~ 2 (2k)! / (2 pi)^(2k)
    k = 15
    approx = 2 * math.factorial(2 * k) / (2 * math.pi) ** (2 * k)
    assert abs(float(bernoulli_positive(k)) / approx - 1) < 0.01


def test_euler_asymptotic():
    # |E_2k| ~ 2^(2k+2) (2k)! / pi^(2k+1)
    k = 15
    approx = 2 ** (2 * k + 2) * math.factorial(2 * k) / math.pi ** (2 * k + 1)
    assert abs(euler_positive(k) / approx - 1) < 0.01


@pytest.mark.parametrize("k", [0, -2])
def test_index_starts_at_one(k):
    with pytest.raises(ValueError):
        bernoulli_positive(k)
    with pytest.raises(ValueError):
        euler_positive(k)
