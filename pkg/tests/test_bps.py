import random
from fractions import Fraction

import pytest

from bpskit.bps import (
    BpsVector,
    GeometryParams,
    local_bps,
    local_bps_from_gw,
    local_gw,
    local_gw_from_bps,
    multiple_cover_contribution,
    relative_bps,
    relative_bps_from_gw,
    relative_gw,
    relative_gw_from_bps,
)


def rational_vector(rng, length):
    return [Fraction(rng.randint(-999, 999), rng.randint(1, 60)) for _ in range(length)]


class TestGeometryParams:
    def test_w_must_be_positive(self):
        with pytest.raises(ValueError):
            GeometryParams(0)

    def test_primitive_flag_is_carried(self):
        assert local_gw([1], w=2, primitive=False).geometry.primitive is False

    def test_bad_kind_rejected(self):
        with pytest.raises(ValueError):
            BpsVector("global", GeometryParams(1), (1,))


class TestLocalTransforms:
    def test_pure_multiple_covers_of_one_class(self):
        out = local_gw_from_bps(local_bps([1, 0, 0]))
        assert out.entries == (1, Fraction(1, 8), Fraction(1, 27))

    def test_zero_maps_to_zero(self):
        assert local_gw_from_bps(local_bps([0, 0, 0])).entries == (0, 0, 0)

    def test_degree_two_hand_value(self):
        out = local_gw_from_bps(local_bps([3, -6]))
        assert out.entries == (3, Fraction(-45, 8))

    def test_inverse_recovers_p2_sample(self):
        out = local_bps_from_gw(local_gw([3, Fraction(-45, 8)]))
        assert out.entries == (3, -6)

    def test_inverse_strips_cover_contribution(self):
        assert local_bps_from_gw(local_gw([1, Fraction(1, 8)])).entries == (1, 0)

    def test_inverse_of_zero(self):
        assert local_bps_from_gw(local_gw([0, 0, 0])).entries == (0, 0, 0)

    def test_empty_input_rejected(self):
        with pytest.raises(ValueError):
            local_gw_from_bps(local_bps([]))
        with pytest.raises(ValueError):
            local_bps_from_gw(local_gw([]))

    def test_relative_vector_rejected(self):
        with pytest.raises(ValueError):
            local_gw_from_bps(relative_bps([1], w=2))

    def test_gw_vector_rejected_by_forward(self):
        with pytest.raises(TypeError):
            local_gw_from_bps(local_gw([1]))


class TestMultipleCoverContribution:
    def test_single_cover_is_the_curve_itself(self):
        assert multiple_cover_contribution(3, 1, 1) == 1

    def test_double_cover_w3(self):
        assert multiple_cover_contribution(3, 1, 2) == Fraction(3, 4)

    def test_double_cover_w1_uses_generalized_binomial(self):
        assert multiple_cover_contribution(1, 1, 2) == Fraction(-1, 4)

    def test_triple_cover_w2(self):
        assert multiple_cover_contribution(2, 1, 3) == Fraction(1, 9)

    def test_single_cover_is_one_for_all_geometries(self):
        for w in range(1, 51):
            for d in range(1, 51):
                assert multiple_cover_contribution(w, d, 1) == 1

    def test_w1_closed_form_alternates(self):
        for k in range(1, 31):
            expected = Fraction((-1) ** (k - 1), k * k)
            assert multiple_cover_contribution(1, 1, k) == expected

    def test_preconditions(self):
        with pytest.raises(ValueError):
            multiple_cover_contribution(0, 1, 1)
        with pytest.raises(ValueError):
            multiple_cover_contribution(1, 1, 0)


class TestRelativeTransforms:
    def test_no_covers_below_degree_two(self):
        assert relative_gw_from_bps(relative_bps([9], w=3)).entries == (9,)

    def test_degree_two_hand_value(self):
        out = relative_gw_from_bps(relative_bps([9, 27], w=3))
        assert out.entries == (9, Fraction(135, 4))

    def test_degree_three_hand_value(self):
        out = relative_gw_from_bps(relative_bps([9, 27, 234], w=3))
        assert out.entries == (9, Fraction(135, 4), 244)

    def test_inverse_hand_recursion(self):
        out = relative_bps_from_gw(relative_gw([9, Fraction(135, 4)], w=3))
        assert out.entries == (9, 27)

    def test_inverse_on_synthetic_input(self):
        out = relative_bps_from_gw(relative_gw([9, 10], w=3))
        assert out.entries == (9, Fraction(13, 4))

    def test_zeros(self):
        for w in (1, 2, 5):
            assert relative_bps_from_gw(relative_gw([0, 0, 0], w=w)).entries == (0, 0, 0)

    def test_local_vector_rejected(self):
        with pytest.raises(ValueError):
            relative_gw_from_bps(local_bps([1]))

    def test_empty_input_rejected(self):
        with pytest.raises(ValueError):
            relative_bps_from_gw(relative_gw([], w=2))


class TestRoundTrips:
    def test_local_round_trip_exact(self):
        rng = random.Random(20240811)
        for _ in range(100):
            n = local_bps(rational_vector(rng, 24))
            assert local_bps_from_gw(local_gw_from_bps(n)) == n

    def test_relative_round_trip_exact(self):
        rng = random.Random(20240812)
        for i in range(100):
            w = (1, 2, 3)[i % 3]
            n = relative_bps(rational_vector(rng, 24), w=w)
            assert relative_bps_from_gw(relative_gw_from_bps(n)) == n


class TestPrefixStability:
    def test_local_inverse_is_triangular(self):
        rng = random.Random(7)
        gw = local_gw(rational_vector(rng, 16))
        full = local_bps_from_gw(gw)
        for d in range(1, 17):
            assert local_bps_from_gw(gw.truncated(d)).entries == full.entries[:d]

    def test_relative_inverse_is_triangular(self):
        rng = random.Random(8)
        gw = relative_gw(rational_vector(rng, 16), w=2)
        full = relative_bps_from_gw(gw)
        for d in range(1, 17):
            assert relative_bps_from_gw(gw.truncated(d)).entries == full.entries[:d]
