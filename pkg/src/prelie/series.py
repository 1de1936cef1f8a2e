"""Truncated exponential generating functions with exact rational coefficients.

A series of order N stores coefficients c_0..c_N of sum c_n x^n.  When the
series is the EGF of a species, c_n = a_n / n! where a_n counts structures
on an n-element set; ``counts`` recovers the a_n and insists they are
integers.  All arithmetic is exact; no floats appear anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    CompositionDomainError,
    NonIntegerCountError,
    OrderMismatchError,
    SeriesOrderError,
)

Rational = Fraction | int


@dataclass(frozen=True)
class PowerSeries:
    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.order < 0:
            raise SeriesOrderError(f"order must be nonnegative, got {self.order}")
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if len(coeffs) != self.order + 1:
            raise ValueError(
                f"expected {self.order + 1} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Rational]) -> PowerSeries:
        cs = tuple(Fraction(c) for c in coeffs)
        return cls(len(cs) - 1, cs)

    @classmethod
    def from_counts(cls, counts: Sequence[Rational]) -> PowerSeries:
        """Build an EGF from structure counts a_0..a_N (c_n = a_n / n!)."""
        return cls.from_coeffs(
            Fraction(a) / math.factorial(n) for n, a in enumerate(counts)
        )

    @classmethod
    def zero(cls, order: int) -> PowerSeries:
        return cls(order, (Fraction(0),) * (order + 1))

    @classmethod
    def one(cls, order: int) -> PowerSeries:
        return cls(order, (Fraction(1),) + (Fraction(0),) * order)

    @classmethod
    def x(cls, order: int) -> PowerSeries:
        if order < 1:
            raise SeriesOrderError("the series x needs order >= 1")
        return cls(order, (Fraction(0), Fraction(1)) + (Fraction(0),) * (order - 1))

    def counts(self) -> list[int]:
        """Structure counts a_n = c_n * n!; errors unless all are integers."""
        out = []
        for n, c in enumerate(self.coeffs):
            a = c * math.factorial(n)
            if a.denominator != 1:
                raise NonIntegerCountError(f"coefficient {n} gives count {a}")
            out.append(int(a))
        return out

    def truncate(self, order: int) -> PowerSeries:
        if order > self.order:
            raise SeriesOrderError(
                f"cannot extend a series of order {self.order} to {order}"
            )
        return PowerSeries(order, self.coeffs[: order + 1])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other: PowerSeries) -> PowerSeries:
        _check_orders(self, other)
        return PowerSeries(
            self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: PowerSeries) -> PowerSeries:
        _check_orders(self, other)
        return PowerSeries(
            self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __mul__(self, other: PowerSeries) -> PowerSeries:
        return series_mul(self, other)

    def scale(self, factor: Rational) -> PowerSeries:
        f = Fraction(factor)
        return PowerSeries(self.order, tuple(f * c for c in self.coeffs))


def _check_orders(f: PowerSeries, g: PowerSeries) -> None:
    if f.order != g.order:
        raise OrderMismatchError(f"orders differ: {f.order} vs {g.order}")


def series_mul(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """Cauchy product truncated at the common order."""
    _check_orders(f, g)
    n = f.order
    fc, gc = f.coeffs, g.coeffs
    out = [Fraction(0)] * (n + 1)
    for i, a in enumerate(fc):
        if a == 0:
            continue
        for j in range(n + 1 - i):
            b = gc[j]
            if b != 0:
                out[i + j] += a * b
    return PowerSeries(n, tuple(out))


def series_compose(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """f(g(x)) truncated; g must have zero constant term."""
    _check_orders(f, g)
    if g.coeffs[0] != 0:
        raise CompositionDomainError("inner series has nonzero constant term")
    n = f.order
    acc = PowerSeries.zero(n)
    power = PowerSeries.one(n)
    for k, a in enumerate(f.coeffs):
        if k > 0:
            power = series_mul(power, g)
            if power.is_zero():
                break
        if a != 0:
            acc = acc + power.scale(a)
    return acc


def series_derivative(f: PowerSeries) -> PowerSeries:
    """Formal derivative; the order drops by one."""
    if f.order < 1:
        raise SeriesOrderError("cannot differentiate a series of order 0")
    return PowerSeries(
        f.order - 1,
        tuple((n + 1) * f.coeffs[n + 1] for n in range(f.order)),
    )


def exp_series(order: int) -> PowerSeries:
    """e^x: the EGF of sets (every count equals 1)."""
    return PowerSeries.from_counts([1] * (order + 1))


def expm1_series(order: int) -> PowerSeries:
    """e^x - 1: the EGF of nonempty sets."""
    return PowerSeries.from_counts([0] + [1] * order)


def geometric_series(order: int) -> PowerSeries:
    """1/(1-x): the EGF of linear orders (counts n!)."""
    return PowerSeries(order, (Fraction(1),) * (order + 1))


def neg_log1m_series(order: int) -> PowerSeries:
    """-log(1-x): counts (n-1)! for n >= 1 (cyclic orders)."""
    return PowerSeries(
        order, (Fraction(0),) + tuple(Fraction(1, n) for n in range(1, order + 1))
    )


def x_over_1mx_series(order: int) -> PowerSeries:
    """x/(1-x): the EGF of nonempty linear orders (counts n! for n >= 1)."""
    return PowerSeries(order, (Fraction(0),) + (Fraction(1),) * order)


def series_exp(g: PowerSeries) -> PowerSeries:
    """e^g for g with zero constant term."""
    return series_compose(exp_series(g.order), g)


def rooted_tree_series(order: int) -> PowerSeries:
    """The unique r with zero constant term and r = x * e^r.

    Solved by running exactly ``order`` fixed-point iterations, which is
    enough because each iteration fixes one more coefficient.  The counts
    are n^(n-1), the numbers of labelled rooted trees.
    """
    if order < 1:
        raise SeriesOrderError("rooted tree series needs order >= 1")
    x = PowerSeries.x(order)
    r = PowerSeries.zero(order)
    for _ in range(order):
        r = series_mul(x, series_exp(r))
    return r


def no_single_child_tree_series(order: int) -> PowerSeries:
    """The unique t with zero constant term and t = x * (e^t - t).

    The root's children form a set of subtrees of any size except exactly
    one, and the same holds recursively, so the counts are the numbers of
    labelled rooted trees in which no vertex has exactly one child.
    """
    if order < 1:
        raise SeriesOrderError("series needs order >= 1")
    x = PowerSeries.x(order)
    t = PowerSeries.zero(order)
    for _ in range(order):
        t = series_mul(x, series_exp(t) - t)
    return t
