"""De Bruijn digraphs, complete digraphs with loops, and the line-digraph
operator.

B(d, n) lives on the d^n words of length n over [0, d-1]; the word
(x_1, ..., x_n) has index sum x_k * d^(n-k) and an arc to every left
shift (x_2, ..., x_n, y).  B(d, 1) is the complete digraph with loops,
and each further dimension is one application of the line-digraph
operator; the word-shift rule is the construction path and the equality
with iterated lines is kept as a tested property.
"""

from __future__ import annotations

from dataclasses import dataclass

from .limits import check_size
from .multidigraph import MultiDigraph


@dataclass(frozen=True)
class DeBruijnParams:
    """Alphabet size d >= 2 and word length n >= 1."""

    d: int
    n: int

    def __post_init__(self):
        if self.d < 2:
            raise ValueError(f"alphabet size must be at least 2, got d={self.d}")
        if self.n < 1:
            raise ValueError(f"word length must be at least 1, got n={self.n}")

    @property
    def vertices(self) -> int:
        return self.d ** self.n


def build_kd_plus(d: int) -> MultiDigraph:
    """Complete digraph on d vertices with a loop at every vertex."""
    if d < 1:
        raise ValueError(f"vertex count must be positive, got {d}")
    g = MultiDigraph(d)
    for u in range(d):
        for v in range(d):
            g.add_arc(u, v)
    return g


def build_debruijn(params: DeBruijnParams, size_bound=None) -> MultiDigraph:
    """De Bruijn digraph by the word-shift rule; d-regular on d^n words."""
    d, n = params.d, params.n
    count = check_size(params.vertices, size_bound, what=f"B({d},{n})")
    g = MultiDigraph(count)
    low = d ** (n - 1)
    for a in range(count):
        tail = (a % low) * d
        for y in range(d):
            g.add_arc(a, tail + y)
    return g


def line_digraph(g: MultiDigraph) -> MultiDigraph:
    """Line digraph: one vertex per arc instance, one arc per composable
    pair of instances.

    Parallel arcs become distinct vertices.  Instances are sorted by
    (tail, head, copy index) and renumbered densely; instance (u, v)
    points to every instance (v, w).  The result has total_arcs(g)
    vertices and sum_v in_degree(v) * out_degree(v) arcs, and never has
    parallel arcs itself.
    """
    instances = []  # id -> (u, v)
    by_tail = [[] for _ in range(g.vertex_count)]
    for (u, v, m) in g.arcs():
        for _ in range(m):
            by_tail[u].append(len(instances))
            instances.append((u, v))
    lg = MultiDigraph(len(instances))
    for e, (_, head) in enumerate(instances):
        for f in by_tail[head]:
            lg.add_arc(e, f)
    return lg


def iterate_line(g: MultiDigraph, k: int, size_bound=None) -> MultiDigraph:
    """k-fold line digraph; k = 0 returns the input unchanged."""
    if k < 0:
        raise ValueError(f"iteration count must be nonnegative, got {k}")
    for _ in range(k):
        check_size(g.total_arcs, size_bound, what="iterated line digraph")
        g = line_digraph(g)
    return g
