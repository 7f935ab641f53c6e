"""Exact Wallis ratios over arbitrary-precision rationals.

``wallis_odd_ratio(n)`` is the value of the integral of sin^(2n+1) over
[0, pi/2]; ``wallis_even_ratio(n)`` is the rational factor in front of
pi/2 for sin^(2n).  Both are grown by their one-step recurrences and
memoized, so repeated queries while summing a series are O(1).
"""

from __future__ import annotations

import threading
from fractions import Fraction

BigRational = Fraction

__all__ = [
    "BigRational",
    "WallisTable",
    "double_factorial",
    "wallis_even_ratio",
    "wallis_odd_ratio",
    "default_table",
]


def double_factorial(n: int) -> int:
    """n * (n-2) * (n-4) * ... down to 1 or 2; the empty product is 1."""
    if n < 0:
        raise ValueError(f"double_factorial needs n >= 0, got {n}")
    result = 1
    for k in range(n, 1, -2):
        result *= k
    return result


class WallisTable:
    """Memoized odd and even Wallis ratios.

    Readers index into lists that only ever grow by appending, so a lookup
    of an already cached index needs no lock.  Growth takes the lock.
    """

    def __init__(self) -> None:
        self._odd: list[Fraction] = [Fraction(1)]
        self._even: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return min(len(self._odd), len(self._even))

    def _grow(self, n: int) -> None:
        with self._lock:
            odd, even = self._odd, self._even
            for k in range(len(odd), n + 1):
                odd.append(odd[-1] * Fraction(2 * k, 2 * k + 1))
            for k in range(len(even), n + 1):
                even.append(even[-1] * Fraction(2 * k - 1, 2 * k))

    def odd(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError(f"Wallis index must be >= 0, got {n}")
        if n >= len(self._odd):
            self._grow(n)
        return self._odd[n]

    def even(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError(f"Wallis index must be >= 0, got {n}")
        if n >= len(self._even):
            self._grow(n)
        return self._even[n]


default_table = WallisTable()


def wallis_odd_ratio(n: int) -> Fraction:
    """(2n)!! / (2n+1)!!, the integral of sin^(2n+1) x over [0, pi/2]."""
    return default_table.odd(n)


def wallis_even_ratio(n: int) -> Fraction:
    """(2n-1)!! / (2n)!!; the integral of sin^(2n) x is this times pi/2."""
    return default_table.even(n)
