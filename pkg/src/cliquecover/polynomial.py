from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence


class CountPolynomial:
    """Dense univariate polynomial with exact integer coefficients, lowest degree first."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[int] = ()) -> None:
        coeffs = list(coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients: tuple[int, ...] = tuple(coeffs)

    @classmethod
    def cell_factor(cls, size: int) -> CountPolynomial:
        """``(1 + x)**size - 1``: ways to take a non-empty subset of a cell, by size."""
        return cls([0] + [comb(size, k) for k in range(1, size + 1)])

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, k: int) -> int:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else 0

    def __add__(self, other: CountPolynomial) -> CountPolynomial:
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        return CountPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __mul__(self, other: CountPolynomial) -> CountPolynomial:
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return CountPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return CountPolynomial(out)

    def __call__(self, x: int | Fraction) -> int | Fraction:
        acc: int | Fraction = 0
        for coeff in reversed(self.coefficients):
            acc = acc * x + coeff
        return acc

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CountPolynomial):
            return self.coefficients == other.coefficients
        if isinstance(other, Sequence):
            return self == CountPolynomial(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        return f"CountPolynomial({list(self.coefficients)})"

    def to_list(self) -> list[int]:
        return list(self.coefficients)


ONE = CountPolynomial([1])
ZERO = CountPolynomial()
