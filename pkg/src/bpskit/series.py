"""Formal power series truncated at a fixed order, with exact rational
coefficients.

A :class:`TruncatedSeries` of order N stores coefficients for t^0 .. t^N.
Every operation truncates eagerly at N: coefficients beyond the order are
discarded and never invented, so each operation is exact on the prefix it
keeps.  All values are immutable.

The module also provides the dictionary between a series with constant
term 1 and its infinite-product form

    f(t) = prod_{n>=1} (1 - t^n)^{e_n}   (mod t^{N+1})

with rational exponents e_n, in both directions (``product_decompose`` /
``product_compose``).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .numtheory import divisors, mobius


class TruncatedSeries:
    """Power series in one formal variable, truncated at order N."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            if order < 1:
                raise ValueError(f"order must be >= 1, got {order}")
            if len(cs) > order + 1:
                del cs[order + 1 :]
            else:
                cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        elif not cs:
            raise ValueError("a series needs at least a constant term")
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        """The constant series 1 at the given order."""
        return cls([1], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, TruncatedSeries) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self.coeffs)!r})"

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def _check_same_order(self, other: TruncatedSeries) -> None:
        if self.order != other.order:
            raise ValueError(
                f"series orders differ: {self.order} vs {other.order}"
            )

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check_same_order(other)
        return TruncatedSeries(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check_same_order(other)
        return TruncatedSeries(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(-a for a in self.coeffs)

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        """Cauchy product, truncated at the common order."""
        self._check_same_order(other)
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(out)

    def log(self) -> TruncatedSeries:
        """Formal logarithm; requires constant term 1, returns constant term 0.

        Uses the recurrence n L_n = n f_n - sum_{j=1}^{n-1} j L_j f_{n-j}
        obtained from f L' = f', so the cost is O(N^2) exact operations.
        """
        if self.coeffs[0] != 1:
            raise ValueError(
                f"log needs constant term 1, got {self.coeffs[0]}"
            )
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for k in range(1, n + 1):
            acc = k * self.coeffs[k]
            for j in range(1, k):
                acc -= j * out[j] * self.coeffs[k - j]
            out[k] = Fraction(acc, k)
        return TruncatedSeries(out)


def series_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Product of two series of equal order."""
    return f * g


def series_log(f: TruncatedSeries) -> TruncatedSeries:
    """Formal logarithm of a series with constant term 1."""
    return f.log()


def product_decompose(f: TruncatedSeries) -> list[Fraction]:
    """Exponents e_1 .. e_N with f = prod (1 - t^n)^{e_n} mod t^{N+1}.

    Writing c_k for the t^k coefficient of -log f, taking log of the product
    gives k c_k = sum_{d|k} d e_d, and Möbius inversion yields

        n e_n = sum_{d|n} mu(n/d) d c_d.

    Requires constant term 1; the decomposition is unique over the rationals.
    """
    neglog = (-f.log()).coeffs
    order = f.order
    exponents = []
    for n in range(1, order + 1):
        acc = Fraction(0)
        for d in divisors(n):
            mu = mobius(n // d)
            if mu:
                acc += mu * d * neglog[d]
        exponents.append(acc / n)
    return exponents


def product_compose(exponents: Sequence, order: int) -> TruncatedSeries:
    """Multiply out prod_n (1 - t^n)^{e_n} up to the given order.

    Missing entries count as exponent 0; exponents may be any rationals.
    Exact inverse of :func:`product_decompose`.
    """
    result = TruncatedSeries.one(order)
    for n, e in enumerate(exponents[:order], start=1):
        e = Fraction(e)
        if e:
            result = result * _binomial_power(e, n, order)
    return result


def _binomial_power(exponent: Fraction, step: int, order: int) -> TruncatedSeries:
    """(1 - t^step)^exponent via the binomial series, truncated."""
    coeffs = [Fraction(0)] * (order + 1)
    coeffs[0] = Fraction(1)
    term = Fraction(1)
    for k in range(1, order // step + 1):
        term = term * (exponent - k + 1) / k
        coeffs[step * k] = term if k % 2 == 0 else -term
    return TruncatedSeries(coeffs)
