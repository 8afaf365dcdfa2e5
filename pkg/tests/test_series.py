from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bpskit.series import (
    TruncatedSeries,
    product_compose,
    product_decompose,
    series_log,
    series_mul,
)

# 1, 1, 2, 3, 5, 7, 11: number of partitions of 0..6
PARTITIONS = [1, 1, 2, 3, 5, 7, 11]


def S(coeffs, order=None):
    return TruncatedSeries(coeffs, order)


class TestArithmetic:
    def test_difference_of_squares(self):
        assert S([1, 1], 3) * S([1, -1], 3) == S([1, 0, -1, 0])

    def test_one_is_identity(self):
        f = S([1, Fraction(2, 3), -5], 4)
        assert f * TruncatedSeries.one(4) == f

    def test_truncation_drops_high_terms(self):
        assert S([1, 1], 1) * S([1, 1], 1) == S([1, 2])

    def test_mismatched_orders_rejected(self):
        with pytest.raises(ValueError):
            series_mul(S([1, 1], 2), S([1, 1], 3))

    def test_immutable(self):
        f = S([1, 1], 2)
        with pytest.raises(AttributeError):
            f.coeffs = ()

    def test_order_validation(self):
        with pytest.raises(ValueError):
            S([1], 0)


class TestLog:
    def test_defining_expansion(self):
        assert series_log(S([1, 1], 3)) == S([0, 1, Fraction(-1, 2), Fraction(1, 3)])

    def test_log_of_one_is_zero(self):
        assert series_log(TruncatedSeries.one(5)) == S([0], 5)

    def test_log_of_geometric_series(self):
        assert series_log(S([1, 1, 1])) == S([0, 1, Fraction(1, 2)])

    def test_requires_unit_constant_term(self):
        with pytest.raises(ValueError):
            series_log(S([2, 1], 3))


class TestProductDecompose:
    def test_single_factor(self):
        assert product_decompose(S([1, -1], 5)) == [1, 0, 0, 0, 0]

    def test_geometric_series(self):
        assert product_decompose(S([1] * 6)) == [-1, 0, 0, 0, 0]

    def test_partition_series_is_euler_product(self):
        assert product_decompose(S(PARTITIONS)) == [-1] * 6

    def test_requires_unit_constant_term(self):
        with pytest.raises(ValueError):
            product_decompose(S([0, 1], 3))


class TestProductCompose:
    def test_single_factor(self):
        assert product_compose([1], 1) == S([1, -1])

    def test_partition_series(self):
        assert product_compose([-1] * 6, 6) == S(PARTITIONS)

    def test_empty_exponents_give_one(self):
        assert product_compose([], 4) == TruncatedSeries.one(4)

    def test_exponent_list_may_be_short_or_long(self):
        assert product_compose([1], 3) == S([1, -1], 3)
        assert product_compose([1, 0, 0, 0, 7, 7], 3) == S([1, -1], 3)


rational = st.fractions(max_numerator=50, max_denominator=12)


@settings(max_examples=200, deadline=None)
@given(
    exponents=st.lists(rational, min_size=1, max_size=24),
    order=st.integers(min_value=1, max_value=24),
)
def test_decompose_inverts_compose(exponents, order):
    composed = product_compose(exponents, order)
    recovered = product_decompose(composed)
    padded = list(exponents[:order]) + [Fraction(0)] * (order - len(exponents))
    assert recovered == padded


@settings(deadline=None)
@given(
    coeffs=st.lists(rational, min_size=1, max_size=16),
)
def test_compose_inverts_decompose(coeffs):
    f = S([1] + coeffs)
    assert product_compose(product_decompose(f), f.order) == f


@settings(deadline=None)
@given(
    f_tail=st.lists(rational, min_size=1, max_size=16),
    g_tail=st.lists(rational, min_size=1, max_size=16),
)
def test_log_turns_products_into_sums(f_tail, g_tail):
    order = max(len(f_tail), len(g_tail))
    f = S([1] + f_tail, order)
    g = S([1] + g_tail, order)
    assert series_log(f * g) == series_log(f) + series_log(g)
