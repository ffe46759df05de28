import pytest

from conftest import hpqd, valid_triples
from otislay import build_kd_plus
from otislay.otis import Coord, OtisParams, build_h, decode, encode, group_of, otis_link


class TestParams:
    def test_valid(self):
        params = OtisParams(4, 6, 3)
        assert params.processors == 24
        assert params.nodes == 8

    def test_d_must_exceed_one(self):
        with pytest.raises(ValueError, match="greater than 1"):
            OtisParams(2, 2, 1)

    def test_d_must_divide_pq(self):
        with pytest.raises(ValueError, match="does not divide"):
            OtisParams(3, 4, 5)

    def test_groups_positive(self):
        with pytest.raises(ValueError):
            OtisParams(0, 4, 2)

    def test_degenerate_single_group_side_allowed(self):
        assert OtisParams(1, 4, 2).nodes == 2


class TestCoordinates:
    def test_encode_zero(self):
        assert encode(0, 0, 3, 5) == 0

    def test_encode_small(self):
        assert encode(1, 1, 2, 2) == 3

    def test_encode_max(self):
        assert encode(2, 4, 3, 5) == 14

    def test_encode_range_checks(self):
        with pytest.raises(ValueError):
            encode(3, 0, 3, 5)
        with pytest.raises(ValueError):
            encode(0, 5, 3, 5)

    def test_decode_examples(self):
        assert decode(5, 2, 4) == Coord(1, 1)
        assert decode(3, 1, 4) == Coord(0, 3)

    def test_decode_range_check(self):
        with pytest.raises(ValueError):
            decode(8, 2, 4)

    def test_round_trip(self):
        for p, q in [(1, 1), (2, 3), (3, 2), (4, 4), (5, 7)]:
            for i in range(p):
                for j in range(q):
                    assert decode(encode(i, j, p, q), p, q) == (i, j)


class TestLinkMap:
    def test_first_processor(self):
        assert otis_link(0, 2, 2) == 3

    def test_single_group_side_reverses(self):
        q = 7
        for a in range(q):
            assert otis_link(a, 1, q) == q - 1 - a

    def test_composing_with_transpose_is_identity(self):
        for p, q in [(2, 2), (2, 3), (3, 4), (1, 6), (5, 5)]:
            for a in range(p * q):
                assert otis_link(otis_link(a, p, q), q, p) == a

    def test_is_bijection(self):
        for p, q in [(2, 3), (4, 4), (1, 8)]:
            images = sorted(otis_link(a, p, q) for a in range(p * q))
            assert images == list(range(p * q))

    def test_range_check(self):
        with pytest.raises(ValueError):
            otis_link(4, 2, 2)


class TestGroups:
    def test_group_of(self):
        assert group_of(0, 2) == 0
        assert group_of(3, 2) == 1

    def test_interval_membership(self):
        for k in range(5):
            for d in (2, 3, 4):
                assert group_of(k * d, d) == k
                assert group_of(k * d + d - 1, d) == k

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            group_of(-1, 2)
        with pytest.raises(ValueError):
            group_of(0, 1)


class TestBuild:
    def test_h222_is_complete_with_loops(self):
        g = build_h(OtisParams(2, 2, 2))
        assert g.arcs() == [(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 1)]
        assert g == build_kd_plus(2)

    def test_h142_has_double_arcs(self):
        g = build_h(OtisParams(1, 4, 2))
        assert g.arcs() == [(0, 1, 2), (1, 0, 2)]

    def test_counts_for_4_6_3(self):
        g = build_h(OtisParams(4, 6, 3))
        assert g.vertex_count == 8
        assert g.total_arcs == 24
        assert g.is_d_regular(3)

    def test_family_regular_with_pq_arcs(self):
        for (p, q, d) in valid_triples(40):
            g = hpqd(p, q, d)
            assert g.vertex_count == p * q // d
            assert g.total_arcs == p * q
            assert g.is_d_regular(d)

    def test_family_dual_identity(self):
        for (p, q, d) in valid_triples(40):
            assert hpqd(p, q, d) == hpqd(q, p, d).dual()
