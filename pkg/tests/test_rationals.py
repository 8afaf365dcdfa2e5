"""Contract of the exact rational scalar used throughout the package.

The scalar is fractions.Fraction: arbitrary precision, always in lowest
terms with a positive denominator, and exact under field arithmetic.
These tests pin the behaviours the rest of the package relies on.
"""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st


def test_schoolbook_addition():
    assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)


def test_zero_absorbs_multiplication():
    assert Fraction(-45, 8) * 0 == Fraction(0, 1)


def test_additive_inverse():
    assert Fraction(3, 4) + Fraction(-3, 4) == Fraction(0, 1)


def test_always_in_lowest_terms_with_positive_denominator():
    x = Fraction(6, -4)
    assert x.numerator == -3
    assert x.denominator == 2
    assert Fraction(0, 7) == Fraction(0, 1)
    assert Fraction(0, 7).denominator == 1


def test_equality_is_structural_after_normalization():
    assert Fraction(2, 4) == Fraction(1, 2)
    assert hash(Fraction(2, 4)) == hash(Fraction(1, 2))


def test_division_by_zero_signals_invalid_input():
    with pytest.raises(ZeroDivisionError):
        Fraction(1, 0)
    with pytest.raises(ZeroDivisionError):
        Fraction(1, 2) / Fraction(0)


rationals = st.fractions(max_numerator=10**9, max_denominator=10**6)


@given(rationals, rationals, rationals)
def test_field_arithmetic_is_exact(x, y, z):
    assert x + y == y + x
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    if z != 0:
        assert (x / z) * z == x
