"""Positive-convention Bernoulli and Euler numbers.

Both come out of one integer triangle (Seidel's boustrophedon), which
produces the zigzag numbers A_n: A_(2k) is the secant number |E_(2k)| and
A_(2k-1) is the tangent number T_k.  The Bernoulli number then follows
from |B_(2k)| = 2k T_k / (4^k (4^k - 1)).
"""

from __future__ import annotations

import threading
from fractions import Fraction
from itertools import accumulate

__all__ = [
    "bernoulli_positive",
    "euler_positive",
    "bernoulli_table",
    "euler_table",
    "zigzag_numbers",
]

_lock = threading.Lock()
_row: list[int] = [1]
_zigzag: list[int] = [1]
_bernoulli: list[Fraction] = [Fraction(0)]  # index 0 unused


def _extend_zigzag(n: int) -> None:
    global _row
    with _lock:
        row = _row
        while len(_zigzag) <= n:
            row = list(accumulate(reversed(row), initial=0))
            _zigzag.append(row[-1])
        _row = row


def zigzag_numbers(n: int) -> list[int]:
    """A_0..A_n, the number of alternating permutations of n elements."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    _extend_zigzag(n)
    return _zigzag[: n + 1]


def euler_positive(k: int) -> int:
    """|E_(2k)|: 1, 5, 61, 1385, ..."""
    if k < 1:
        raise ValueError(f"Euler type numbers are indexed from 1, got {k}")
    _extend_zigzag(2 * k)
    return _zigzag[2 * k]


def bernoulli_positive(k: int) -> Fraction:
    """|B_(2k)|: 1/6, 1/30, 1/42, 1/30, 5/66, ..."""
    if k < 1:
        raise ValueError(f"Bernoulli type numbers are indexed from 1, got {k}")
    if k >= len(_bernoulli):
        _extend_zigzag(2 * k - 1)
        with _lock:
            for j in range(len(_bernoulli), k + 1):
                four = 4**j
                _bernoulli.append(Fraction(2 * j * _zigzag[2 * j - 1], four * (four - 1)))
    return _bernoulli[k]


def bernoulli_table(n: int) -> list[Fraction]:
    """[B_1, ..., B_n] in the positive convention."""
    return [bernoulli_positive(k) for k in range(1, n + 1)]


def euler_table(n: int) -> list[int]:
    """[E_1, ..., E_n] in the positive convention."""
    return [euler_positive(k) for k in range(1, n + 1)]
