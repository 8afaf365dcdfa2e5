"""Generalized Donaldson-Thomas invariants of the quiver with one vertex
and m loops.

Two independent routes to the same numbers:

* a closed form as a Möbius-weighted divisor sum divided by n^2
  (``dt_closed``), evaluated over big integers with the divisibility and
  nonnegativity of the result asserted at runtime;
* the product expansion of the Euler-characteristic generating function
  F(t) = sum chi_n t^n of the noncommutative Hilbert schemes,

      F((-1)^(m-1) t) = prod_{n>=1} (1 - t^n)^(-(-1)^((m-1)n) n DT_n),

  read off in both directions (``dt_from_euler`` / ``euler_from_dt``).

The Euler characteristics chi_n are always inputs; nothing is computed
from representation varieties.  m = 0 is admitted: the closed form with
generalized binomials degenerates to DT_n = delta_{n,1}, matching the
loop-free framed quiver.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .numtheory import divisors, gen_binom, mobius
from .series import TruncatedSeries, product_compose, product_decompose


class FormulaIntegrityError(ArithmeticError):
    """The closed-form divisor sum failed divisibility or nonnegativity.

    This cannot happen for valid (m, n); it exists as a loud tripwire for
    the internal consistency of the formula.
    """


@dataclass(frozen=True)
class DtTable:
    """DT values indexed by (m, n) for 0 <= m <= m_max, 1 <= n <= n_max."""

    m_max: int
    n_max: int
    entries: dict[tuple[int, int], int]

    def row(self, m: int) -> list[int]:
        """Values DT_1 .. DT_{n_max} for a fixed loop count m."""
        return [self.entries[m, n] for n in range(1, self.n_max + 1)]


@dataclass(frozen=True)
class EulerSeries:
    """Euler characteristics chi_0 .. chi_N of the rank-n Hilbert schemes
    of the m-loop quiver, with chi_0 = 1 (the rank-0 scheme is a point)."""

    m: int
    chi: tuple[int, ...]

    def __post_init__(self):
        if self.m < 0:
            raise ValueError(f"loop count m must be >= 0, got {self.m}")
        chi = tuple(int(c) for c in self.chi)
        if not chi or chi[0] != 1:
            raise ValueError("Euler series must start with chi_0 = 1")
        object.__setattr__(self, "chi", chi)

    @property
    def order(self) -> int:
        return len(self.chi) - 1


def _sign(parity: int) -> int:
    return -1 if parity % 2 else 1


def _dt_divisor_sum(m: int, n: int, upper_from_divisor: bool = True) -> Fraction:
    """The raw divisor sum divided by n^2, before integrality checks.

    ``upper_from_divisor`` selects the binomial upper index m*d - 1; the
    False branch uses m*n - 1 instead and exists only so tests can show
    that reading breaks integrality (e.g. 7/4 at m = 2, n = 4).
    """
    total = 0
    for d in divisors(n):
        mu = mobius(n // d)
        if not mu:
            continue
        upper = m * (d if upper_from_divisor else n) - 1
        total += mu * _sign((m - 1) * (n - d)) * gen_binom(upper, d - 1)
    return Fraction(total, n * n)


def dt_closed(m: int, n: int) -> int:
    """DT invariant of the m-loop quiver in rank n, as a divisor sum.

    (1/n^2) sum_{d|n} mu(n/d) (-1)^((m-1)(n-d)) binom(md-1, d-1), evaluated
    exactly.  The sum always divides by n^2 and the result is a nonnegative
    integer; violation raises :class:`FormulaIntegrityError`.
    """
    if m < 0:
        raise ValueError(f"loop count m must be >= 0, got {m}")
    if n < 1:
        raise ValueError(f"rank n must be >= 1, got {n}")
    value = _dt_divisor_sum(m, n)
    if value.denominator != 1:
        raise FormulaIntegrityError(
            f"divisor sum for (m={m}, n={n}) is non-integral: {value}"
        )
    if value < 0:
        raise FormulaIntegrityError(
            f"DT value for (m={m}, n={n}) is negative: {value}"
        )
    return int(value)


def dt_table(m_max: int, n_max: int) -> DtTable:
    """All DT values for 0 <= m <= m_max, 1 <= n <= n_max."""
    if m_max < 0 or n_max < 1:
        raise ValueError("dt_table needs m_max >= 0 and n_max >= 1")
    entries = {
        (m, n): dt_closed(m, n)
        for m in range(m_max + 1)
        for n in range(1, n_max + 1)
    }
    return DtTable(m_max, n_max, entries)


def dt_from_euler(e: EulerSeries) -> list[int]:
    """DT_1 .. DT_N from an Euler-characteristic series via product expansion.

    Substitutes t -> (-1)^(m-1) t into F, decomposes the result into
    prod (1 - t^n)^{e_n}, and reads DT_n = -e_n (-1)^((m-1)n) / n.  Raises
    ValueError if any DT_n fails to be an integer (inconsistent input).
    """
    order = e.order
    if order < 1:
        raise ValueError("Euler series needs at least one term beyond chi_0")
    signed = TruncatedSeries(
        (_sign((e.m - 1) * i) * c for i, c in enumerate(e.chi)), order
    )
    exponents = product_decompose(signed)
    dt = []
    for n, expo in enumerate(exponents, start=1):
        value = Fraction(-expo * _sign((e.m - 1) * n), n)
        if value.denominator != 1:
            raise ValueError(
                f"Euler series is inconsistent: DT_{n} = {value} is not an integer"
            )
        dt.append(int(value))
    return dt


def euler_from_dt(m: int, dt: Sequence[int], order: int | None = None) -> EulerSeries:
    """Euler-characteristic series reproducing the given DT values.

    Exact inverse of :func:`dt_from_euler`; dt is indexed from n = 1 and
    padded with zeros up to the requested order.
    """
    if m < 0:
        raise ValueError(f"loop count m must be >= 0, got {m}")
    if order is None:
        order = len(dt)
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    if len(dt) > order:
        raise ValueError(f"{len(dt)} DT values exceed order {order}")
    exponents = [
        -_sign((m - 1) * n) * n * int(v) for n, v in enumerate(dt, start=1)
    ]
    signed = product_compose(exponents, order)
    chi = [int(_sign((m - 1) * i) * c) for i, c in enumerate(signed.coeffs)]
    return EulerSeries(m, tuple(chi))
