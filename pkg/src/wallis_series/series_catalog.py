"""Named Maclaurin series and their closed-form evaluators.

Every entry pairs an exact coefficient formula with a floating-point
closed form.  The formulas are written as the classical expansions in
terms of factorials, double factorials and the positive-convention
Bernoulli / Euler numbers; the closed forms only feed the quadrature
oracle and never the transform itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from . import _kernels
from .errors import DomainError, UnknownSeriesError
from .exact_core import wallis_even_ratio
from .number_sequences import bernoulli_positive, euler_positive
from .streams import CoefficientStream

__all__ = [
    "BOUNDARY_CLASSES",
    "SeriesSpec",
    "catalog_lookup",
    "catalog_names",
    "coefficient",
    "direct_eval",
]

BOUNDARY_CLASSES = ("entire", "converges_at_1", "diverges_at_1_integrable")


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


# coefficient formulas, a_k as a function of the full index k ---------------


def _sin(k):
    j = (k - 1) // 2
    return Fraction(_sign(j), factorial(k))


def _cos(k):
    return Fraction(_sign(k // 2), factorial(k))


def _inv_factorial(k):
    return Fraction(1, factorial(k))


def _arcsin(k):
    # (2j-1)!!/(2j)!! is the cached even Wallis ratio
    return wallis_even_ratio((k - 1) // 2) / k


def _x_cot_x(k):
    j = k // 2
    if j == 0:
        return Fraction(1)
    return -(4**j) * bernoulli_positive(j) / factorial(k)


def _arctan(k):
    return Fraction(_sign((k - 1) // 2), k)


def _artanh(k):
    return Fraction(1, k)


def _arsinh(k):
    return _sign((k - 1) // 2) * _arcsin(k)


def _tan(k):
    j = (k + 1) // 2
    return 4**j * (4**j - 1) * bernoulli_positive(j) / factorial(2 * j)


def _x_over_sin_x(k):
    j = k // 2
    if j == 0:
        return Fraction(1)
    return 2 * (2 ** (2 * j - 1) - 1) * bernoulli_positive(j) / factorial(k)


def _x_over_sinh_x(k):
    return _sign(k // 2) * _x_over_sin_x(k)


def _sec(k):
    j = k // 2
    if j == 0:
        return Fraction(1)
    return Fraction(euler_positive(j), factorial(k))


def _sech(k):
    return _sign(k // 2) * _sec(k)


@dataclass(frozen=True)
class SeriesSpec:
    name: str
    parity: str
    boundary_class: str
    application: int | None
    description: str
    _formula: object = field(repr=False, compare=False)

    @property
    def code(self) -> int:
        return _kernels.CODES[self.name]

    def stream(self) -> CoefficientStream:
        return _streams[self.name]

    def coefficient(self, k: int) -> Fraction:
        return self.stream().coefficient(k)

    def direct_eval(self, x: float, one_minus_x: float | None = None) -> float:
        """f(x) for x in [0, 1] by its closed form.

        Pass ``one_minus_x`` when 1 - x is known more accurately than the
        rounded subtraction would give it.
        """
        x = float(x)
        if not 0.0 <= x <= 1.0:
            raise DomainError(f"{self.name}: argument {x} outside [0, 1]")
        omy = 1.0 - x if one_minus_x is None else float(one_minus_x)
        if self.boundary_class == "diverges_at_1_integrable" and omy <= 0.0:
            raise DomainError(f"{self.name} diverges at x = 1")
        return float(_kernels.eval_array(self.code, x, omy))


_ENTRIES = [
    SeriesSpec("sin", "odd", "entire", 1, "sin x", _sin),
    SeriesSpec("cos", "even", "entire", 2, "cos x", _cos),
    SeriesSpec("sinh", "odd", "entire", 3, "sinh x", _inv_factorial),
    SeriesSpec("cosh", "even", "entire", 4, "cosh x", _inv_factorial),
    SeriesSpec("arcsin", "odd", "converges_at_1", 5, "arcsin x", _arcsin),
    SeriesSpec("x_cot_x", "even", "converges_at_1", 6, "x cot x", _x_cot_x),
    SeriesSpec("arctan", "odd", "converges_at_1", 7, "arctan x", _arctan),
    SeriesSpec("artanh", "odd", "diverges_at_1_integrable", 8, "artanh x", _artanh),
    SeriesSpec("arsinh", "odd", "converges_at_1", 9, "arsinh x", _arsinh),
    SeriesSpec("tan", "odd", "converges_at_1", 10, "tan x", _tan),
    SeriesSpec("x_over_sin_x", "even", "converges_at_1", 11, "x / sin x", _x_over_sin_x),
    SeriesSpec("x_over_sinh_x", "even", "converges_at_1", 12, "x / sinh x", _x_over_sinh_x),
    SeriesSpec("sec", "even", "converges_at_1", 13, "sec x", _sec),
    SeriesSpec("sech", "even", "converges_at_1", 14, "sech x", _sech),
]

_CATALOG: dict[str, SeriesSpec] = {spec.name: spec for spec in _ENTRIES}
_streams: dict[str, CoefficientStream] = {
    spec.name: CoefficientStream(spec._formula, parity=spec.parity, name=spec.name)
    for spec in _ENTRIES
}


def catalog_names() -> list[str]:
    return [spec.name for spec in _ENTRIES]


def catalog_lookup(name: str) -> SeriesSpec:
    try:
        return _CATALOG[name]
    except KeyError:
        raise UnknownSeriesError(name) from None


def coefficient(name: str, k: int) -> Fraction:
    return catalog_lookup(name).coefficient(k)


def direct_eval(name: str, x: float, one_minus_x: float | None = None) -> float:
    return catalog_lookup(name).direct_eval(x, one_minus_x)


def partial_sum(name: str, x: float, degree: int) -> float:
    """Float value of the Maclaurin polynomial of ``name`` up to ``degree``."""
    spec = catalog_lookup(name)
    return math.fsum(float(spec.coefficient(k)) * x**k for k in range(degree + 1))
