"""Recognition of iterated line digraphs by walk-neighborhood conditions.

A digraph without sinks or sources is an n-th line digraph exactly when
(I) no vertex pair is joined by two or more n-walks, and (II) the
(n-1)-th and n-th walk-neighborhood conditions hold: whenever n-walks
u -> w, v -> w, and v -> x exist, an n-walk u -> x exists as well.
Condition (II) is equivalent to the distinct n-out-neighborhood sets
being pairwise disjoint, so "shares an n-out-neighbor" partitions the
vertices into classes with identical neighborhoods.  For a d-regular
graph satisfying both conditions each class has exactly d members; the
checks below never assume regularity.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._backend import heuchenne_violation, sat_matmul
from .multidigraph import MultiDigraph, WalkCountMatrix, adjacency_matrix, walk_counts


@dataclass(frozen=True)
class FailureWitness:
    """Re-checkable evidence for a failed recognition.

    ``condition`` is "multiple-walks" (vertices is the pair (u, v) with
    two or more ``order``-walks) or "heuchenne" (vertices is (u, v, w, x)
    with ``order``-walks u -> w, v -> w, v -> x but none u -> x).
    """

    condition: str
    order: int
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class LineRecognitionVerdict:
    is_nth_line: bool
    n: int
    failure_witness: FailureWitness | None = None


def has_multiple_n_walks(g: MultiDigraph, n: int):
    """(True, (u, v)) when some pair is joined by two or more n-walks,
    else (False, None); the pair is the lexicographically smallest one."""
    if n < 1:
        raise ValueError(f"walk length must be positive, got {n}")
    pair = walk_counts(g, n).first_multiple()
    return (pair is not None, pair)


def _condition_from_matrix(walks: WalkCountMatrix):
    """Walk-neighborhood condition for one precomputed walk order."""
    size = walks.size
    reach = walks.thresholded()
    # Two distinct neighborhood sets intersect exactly when some column is
    # populated by two different row classes; one O(size^2) sweep decides it.
    class_of = {}
    column_class = [-1] * size
    clean = True
    for u in range(size):
        row = reach[u * size : (u + 1) * size]
        cid = class_of.setdefault(row, len(class_of))
        if not clean:
            continue
        base = u * size
        for w in range(size):
            if reach[base + w]:
                seen = column_class[w]
                if seen < 0:
                    column_class[w] = cid
                elif seen != cid:
                    clean = False
                    break
    if clean:
        return (True, None)
    u, v = heuchenne_violation(size, reach)
    row_u = reach[u * size : (u + 1) * size]
    row_v = reach[v * size : (v + 1) * size]
    w = next(k for k in range(size) if row_u[k] and row_v[k])
    x = next(k for k in range(size) if row_v[k] and not row_u[k])
    return (False, (u, v, w, x))


def heuchenne_condition(g: MultiDigraph, n: int):
    """(True, None) when the n-th walk-neighborhood condition holds, else
    (False, (u, v, w, x)) with the lexicographically smallest violation.

    Order 0 walks form the identity relation, so the condition holds
    vacuously there.
    """
    if n < 0:
        raise ValueError(f"condition order must be nonnegative, got {n}")
    if n == 0:
        return (True, None)
    return _condition_from_matrix(walk_counts(g, n))


def is_nth_line_digraph(g: MultiDigraph, n: int) -> LineRecognitionVerdict:
    """Decide whether g is an n-th iterated line digraph.

    Requires a digraph without sinks or sources; violating that hypothesis
    raises instead of producing a verdict.  On failure the verdict names
    the first violated condition in the order: multiple n-walks, then the
    (n-1)-th, then the n-th walk-neighborhood condition.
    """
    if n < 1:
        raise ValueError(f"line-digraph order must be positive, got {n}")
    if g.has_sink_or_source():
        bad = next(
            u
            for u in range(g.vertex_count)
            if g.out_degree(u) == 0 or g.in_degree(u) == 0
        )
        raise ValueError(
            f"recognition requires a digraph without sinks or sources; "
            f"vertex {bad} has in-degree {g.in_degree(bad)} and "
            f"out-degree {g.out_degree(bad)}"
        )

    size = g.vertex_count
    adj = bytes(adjacency_matrix(g))
    prev = walk_counts(g, n - 1)
    if n == 1:
        current = walk_counts(g, 1)
    else:
        current = WalkCountMatrix(n, size, bytes(sat_matmul(size, prev.data, adj)))

    pair = current.first_multiple()
    if pair is not None:
        witness = FailureWitness("multiple-walks", n, pair)
        return LineRecognitionVerdict(False, n, witness)
    for walks in (prev, current):
        if walks.order == 0:
            continue
        ok, quad = _condition_from_matrix(walks)
        if not ok:
            witness = FailureWitness("heuchenne", walks.order, quad)
            return LineRecognitionVerdict(False, n, witness)
    return LineRecognitionVerdict(True, n, None)
