"""
Complete Bell polynomials and a truncated power-series ring.

Both Bell implementations are generic over ring elements: ints, Fractions,
mpf values or `TruncatedSeries`. Pass `one` when the inputs are not numbers so
the empty product has the right type.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from math import comb, factorial, prod
from typing import Any

from mzvlab.core import DomainError
from mzvlab.indices import c_partitions


def bell_complete(xs: Sequence[Any], one: Any = 1) -> Any:
    """Y_p(x_1..x_p) by Y_p = sum_j C(p-1, j) x_{p-j} Y_j"""
    ys = [one]
    for p in range(1, len(xs) + 1):
        total = 0 * one
        for j in range(p):
            total = total + comb(p - 1, j) * (xs[p - j - 1] * ys[j])
        ys.append(total)
    return ys[-1]


def _power(x: Any, exponent: int, one: Any) -> Any:
    result = one
    for _ in range(exponent):
        result = result * x
    return result


def partition_coefficient(cs: Sequence[int]) -> int:
    """p! / prod(c_j! (j!)^c_j)"""
    p = sum(j * c for j, c in enumerate(cs, start=1))
    denom = prod(factorial(c) * factorial(j) ** c for j, c in enumerate(cs, start=1))
    return factorial(p) // denom


def bell_complete_explicit(xs: Sequence[Any], one: Any = 1) -> Any:
    """Y_p(x_1..x_p) as the sum over c_1 + 2c_2 + ... + pc_p = p"""
    total = 0 * one
    for cs in c_partitions(len(xs)):
        term = one
        for x, c in zip(xs, cs, strict=True):
            if c:
                term = term * _power(x, c, one)
        total = total + partition_coefficient(cs) * term
    return total


@dataclass(frozen=True, slots=True)
class TruncatedSeries:
    """power series in one variable, kept up to and including `order`"""

    coeffs: tuple

    @classmethod
    def constant(cls, value: Any, order: int) -> "TruncatedSeries":
        return cls((value, *([0 * value] * order)))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Any:
        return self.coeffs[i]

    def _check(self, other: "TruncatedSeries") -> None:
        if other.order != self.order:
            raise DomainError("series orders differ")

    def __add__(self, other: Any) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            self._check(other)
            return TruncatedSeries(
                tuple(a + b for a, b in zip(self.coeffs, other.coeffs, strict=True))
            )
        return TruncatedSeries((self.coeffs[0] + other, *self.coeffs[1:]))

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-a for a in self.coeffs))

    def __sub__(self, other: Any) -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other: Any) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries(tuple(a * other for a in self.coeffs))
        self._check(other)
        out = []
        for n in range(self.order + 1):
            total = 0 * self.coeffs[0]
            for i in range(n + 1):
                total = total + self.coeffs[i] * other.coeffs[n - i]
            out.append(total)
        return TruncatedSeries(tuple(out))

    __rmul__ = __mul__
