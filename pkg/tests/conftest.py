"""Shared builders and independent brute-force oracles.

The oracles deliberately avoid the library's matrix/kernel code paths:
walk counts come from literal recursive enumeration of arc sequences,
isomorphism from trying every vertex permutation, and the
walk-neighborhood condition from its four-variable quantifier form.
"""

import itertools

from otislay import MultiDigraph, build_h
from otislay.otis import OtisParams


def hpqd(p, q, d):
    return build_h(OtisParams(p, q, d))


def valid_triples(max_pq):
    """All (p, q, d) with d > 1, d | pq, pq <= max_pq."""
    out = []
    for p in range(1, max_pq + 1):
        for q in range(1, max_pq // p + 1):
            pq = p * q
            for d in range(2, pq + 1):
                if pq % d == 0:
                    out.append((p, q, d))
    return out


def random_multidigraph(rng, min_vertices=1, max_vertices=5, max_arcs=8):
    n = rng.randint(min_vertices, max_vertices)
    g = MultiDigraph(n)
    for _ in range(rng.randint(0, max_arcs)):
        g.add_arc(rng.randrange(n), rng.randrange(n))
    return g


def relabel(g, perm):
    """Copy of g with vertex u renamed perm[u]."""
    h = MultiDigraph(g.vertex_count)
    for (u, v, m) in g.arcs():
        h.add_arc(perm[u], perm[v], m)
    return h


def out_lists(g):
    out = [[] for _ in range(g.vertex_count)]
    for (u, v, m) in g.arcs():
        out[u].append((v, m))
    return out


def brute_walk_count(g, n, u, v, _out=None):
    """Exact number of n-walks u -> v by recursive enumeration."""
    out = out_lists(g) if _out is None else _out
    def rec(x, k):
        if k == 0:
            return 1 if x == v else 0
        return sum(m * rec(w, k - 1) for (w, m) in out[x])
    return rec(u, n)


def brute_reach(g, n):
    """0/1 matrix of n-walk existence, rows as lists."""
    out = out_lists(g)
    size = g.vertex_count
    return [
        [1 if brute_walk_count(g, n, u, v, _out=out) else 0 for v in range(size)]
        for u in range(size)
    ]


def brute_multiple_walks(g, n):
    """Lexicographically first pair with two or more n-walks, or None."""
    out = out_lists(g)
    for u in range(g.vertex_count):
        for v in range(g.vertex_count):
            if brute_walk_count(g, n, u, v, _out=out) >= 2:
                return (u, v)
    return None


def brute_heuchenne(g, n):
    """Quantifier-literal walk-neighborhood condition with lex-least
    violating 4-tuple."""
    size = g.vertex_count
    if n == 0:
        return (True, None)
    reach = brute_reach(g, n)
    for u in range(size):
        for v in range(size):
            for w in range(size):
                if reach[u][w] and reach[v][w]:
                    for x in range(size):
                        if reach[v][x] and not reach[u][x]:
                            return (False, (u, v, w, x))
    return (True, None)


def brute_isomorphic(a, b):
    """All-permutations isomorphism oracle."""
    if a.vertex_count != b.vertex_count:
        return False
    arcs_a = {(u, v): m for (u, v, m) in a.arcs()}
    arcs_b = {(u, v): m for (u, v, m) in b.arcs()}
    for perm in itertools.permutations(range(a.vertex_count)):
        if {(perm[u], perm[v]): m for (u, v), m in arcs_a.items()} == arcs_b:
            return True
    return False
