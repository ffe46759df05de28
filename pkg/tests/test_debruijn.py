import random

import pytest

from conftest import hpqd, random_multidigraph
from otislay import MultiDigraph, isomorphic
from otislay.debruijn import (
    DeBruijnParams,
    build_debruijn,
    build_kd_plus,
    iterate_line,
    line_digraph,
)


def cycle(n):
    g = MultiDigraph(n)
    for u in range(n):
        g.add_arc(u, (u + 1) % n)
    return g


class TestCompleteWithLoops:
    def test_single_vertex_loop(self):
        assert build_kd_plus(1).arcs() == [(0, 0, 1)]

    def test_two_vertices(self):
        assert build_kd_plus(2).arcs() == [(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 1)]

    def test_matches_square_interconnect(self):
        assert build_kd_plus(2) == hpqd(2, 2, 2)

    def test_regularity(self):
        for d in (1, 2, 3, 5):
            g = build_kd_plus(d)
            assert g.vertex_count == d
            assert g.total_arcs == d * d
            assert g.is_d_regular(d)


class TestDeBruijn:
    def test_params_validation(self):
        with pytest.raises(ValueError):
            DeBruijnParams(1, 2)
        with pytest.raises(ValueError):
            DeBruijnParams(2, 0)

    def test_dimension_one_is_complete_with_loops(self):
        assert build_debruijn(DeBruijnParams(2, 1)) == build_kd_plus(2)
        assert build_debruijn(DeBruijnParams(5, 1)) == build_kd_plus(5)

    def test_shift_arcs(self):
        g = build_debruijn(DeBruijnParams(2, 2))
        assert g.vertex_count == 4
        # word 01 has index 1 and shifts to 10 and 11
        assert [(v, m) for (u, v, m) in g.arcs() if u == 1] == [(2, 1), (3, 1)]

    def test_regular_with_power_count(self):
        for d, n in [(2, 1), (2, 4), (3, 2), (4, 2)]:
            g = build_debruijn(DeBruijnParams(d, n))
            assert g.vertex_count == d**n
            assert g.is_d_regular(d)

    def test_size_guard(self):
        with pytest.raises(ValueError, match="size"):
            build_debruijn(DeBruijnParams(2, 13))
        with pytest.raises(ValueError, match="size"):
            build_debruijn(DeBruijnParams(2, 4), size_bound=8)


class TestLineDigraph:
    def test_cycle_is_fixed_point(self):
        assert isomorphic(line_digraph(cycle(3)), cycle(3))

    def test_counts_for_complete_with_loops(self):
        lg = line_digraph(build_kd_plus(2))
        assert lg.vertex_count == 4
        assert lg.total_arcs == 8

    def test_parallel_arcs_become_distinct_vertices(self):
        lg = line_digraph(hpqd(1, 4, 2))
        # instances: (0,1,0) (0,1,1) (1,0,0) (1,0,1) -> ids 0..3
        assert lg.arcs() == [
            (0, 2, 1),
            (0, 3, 1),
            (1, 2, 1),
            (1, 3, 1),
            (2, 0, 1),
            (2, 1, 1),
            (3, 0, 1),
            (3, 1, 1),
        ]

    def test_count_formulas(self):
        rng = random.Random(37)
        for _ in range(40):
            g = random_multidigraph(rng, max_vertices=6, max_arcs=10)
            lg = line_digraph(g)
            assert lg.vertex_count == g.total_arcs
            expected_arcs = sum(
                g.in_degree(v) * g.out_degree(v) for v in range(g.vertex_count)
            )
            assert lg.total_arcs == expected_arcs

    def test_preserves_regularity(self):
        for d, n in [(2, 2), (3, 1), (2, 3)]:
            g = build_debruijn(DeBruijnParams(d, n))
            assert line_digraph(g).is_d_regular(d)

    def test_never_produces_parallel_arcs(self):
        rng = random.Random(41)
        for _ in range(30):
            g = random_multidigraph(rng, max_vertices=5, max_arcs=8)
            assert all(m == 1 for (_, _, m) in line_digraph(g).arcs())


class TestIteration:
    def test_zero_iterations_is_identity(self):
        g = hpqd(2, 4, 2)
        assert iterate_line(g, 0) == g

    def test_vertex_count_doubles_for_degree_two(self):
        assert iterate_line(build_kd_plus(2), 2).vertex_count == 8

    def test_matches_shift_construction(self):
        k2 = build_kd_plus(2)
        for n in (2, 3, 4):
            assert isomorphic(
                iterate_line(k2, n - 1), build_debruijn(DeBruijnParams(2, n))
            )

    def test_commutes_with_dual(self):
        g = hpqd(3, 4, 2)
        assert isomorphic(line_digraph(g.dual()), line_digraph(g).dual())

    def test_size_guard(self):
        with pytest.raises(ValueError, match="size"):
            iterate_line(build_kd_plus(2), 4, size_bound=10)

    def test_negative_iterations_rejected(self):
        with pytest.raises(ValueError):
            iterate_line(build_kd_plus(2), -1)
