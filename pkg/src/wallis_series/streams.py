"""Lazy Maclaurin coefficient streams with exact rational entries."""

from __future__ import annotations

from collections.abc import Callable, Sequence
from fractions import Fraction
from numbers import Rational

__all__ = ["CoefficientStream"]

PARITIES = ("even", "odd", "mixed")


class CoefficientStream:
    """Coefficients a_k of f(x) = sum a_k x^k, computed on demand.

    ``degree`` is the index of the last possibly nonzero coefficient, or
    None for an infinite stream.  ``parity`` is a declaration used by the
    transform engine to route the stream; it is not re-derived.
    """

    def __init__(self, func: Callable[[int], Fraction], *, parity: str = "mixed",
                 degree: int | None = None, name: str | None = None):
        if parity not in PARITIES:
            raise ValueError(f"parity must be one of {PARITIES}, got {parity!r}")
        self._func = func
        self._cache: dict[int, Fraction] = {}
        self.parity = parity
        self.degree = degree
        self.name = name

    def __repr__(self) -> str:
        label = self.name or "anonymous"
        return f"CoefficientStream({label}, parity={self.parity}, degree={self.degree})"

    def coefficient(self, k: int) -> Fraction:
        if k < 0:
            raise ValueError(f"coefficient index must be >= 0, got {k}")
        if self.degree is not None and k > self.degree:
            return Fraction(0)
        try:
            return self._cache[k]
        except KeyError:
            if (self.parity == "even" and k % 2) or (self.parity == "odd" and not k % 2):
                value = Fraction(0)
            else:
                value = Fraction(self._func(k))
            self._cache[k] = value
            return value

    __call__ = coefficient

    def __getitem__(self, k: int) -> Fraction:
        return self.coefficient(k)

    def head(self, n: int) -> list[Fraction]:
        return [self.coefficient(k) for k in range(n)]

    @property
    def is_finite(self) -> bool:
        return self.degree is not None

    # constructors

    @classmethod
    def polynomial(cls, coeffs: Sequence, name: str | None = None) -> CoefficientStream:
        values = [Fraction(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        nonzero = [k for k, c in enumerate(values) if c]
        if all(k % 2 == 0 for k in nonzero):
            parity = "even"
        elif all(k % 2 for k in nonzero):
            parity = "odd"
        else:
            parity = "mixed"
        degree = len(values) - 1 if values else -1
        return cls(lambda k: values[k], parity=parity, degree=degree, name=name)

    @classmethod
    def monomial(cls, n: int, coeff=1) -> CoefficientStream:
        return cls.polynomial([0] * n + [coeff], name=f"x^{n}")

    @classmethod
    def zero(cls) -> CoefficientStream:
        return cls.polynomial([], name="zero")

    # linear algebra

    def _combine(self, other: CoefficientStream, func, name: str) -> CoefficientStream:
        parity = self.parity if self.parity == other.parity else "mixed"
        if self.degree is None or other.degree is None:
            degree = None
        else:
            degree = max(self.degree, other.degree)
        return CoefficientStream(func, parity=parity, degree=degree, name=name)

    def __add__(self, other: CoefficientStream) -> CoefficientStream:
        if not isinstance(other, CoefficientStream):
            return NotImplemented
        return self._combine(other, lambda k: self(k) + other(k), f"({self.name}+{other.name})")

    def __sub__(self, other: CoefficientStream) -> CoefficientStream:
        if not isinstance(other, CoefficientStream):
            return NotImplemented
        return self._combine(other, lambda k: self(k) - other(k), f"({self.name}-{other.name})")

    def __rmul__(self, scalar) -> CoefficientStream:
        if not isinstance(scalar, (int, Rational)):
            return NotImplemented
        c = Fraction(scalar)
        if c == 0:
            return CoefficientStream.zero()
        return CoefficientStream(lambda k: c * self(k), parity=self.parity,
                                 degree=self.degree, name=f"{c}*{self.name}")

    __mul__ = __rmul__

    def __neg__(self) -> CoefficientStream:
        return (-1) * self

    def even_part(self) -> CoefficientStream:
        if self.parity == "odd":
            return CoefficientStream.zero()
        return CoefficientStream(lambda k: self(k) if k % 2 == 0 else 0, parity="even",
                                 degree=self.degree, name=f"even({self.name})")

    def odd_part(self) -> CoefficientStream:
        if self.parity == "even":
            return CoefficientStream.zero()
        return CoefficientStream(lambda k: self(k) if k % 2 else 0, parity="odd",
                                 degree=self.degree, name=f"odd({self.name})")
