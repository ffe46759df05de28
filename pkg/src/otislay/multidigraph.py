"""Directed multigraphs with arc multiplicities, walk counting, and duality.

Vertices are dense indices 0..N-1.  Arcs are stored as a map from the
ordered pair (u, v) to a strictly positive multiplicity; every consumer
iterates arcs in (u, v) order so serialization and tests are reproducible.
Graphs are mutable while being built (``add_arc``) and treated as
immutable afterwards; the analysis functions never mutate their input.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._backend import sat_matmul


class MultiDigraph:
    """Directed graph on vertices 0..N-1 with positive arc multiplicities."""

    __slots__ = ("vertex_count", "_arcs", "_out_deg", "_in_deg", "_total")

    def __init__(self, vertex_count: int):
        if vertex_count < 0:
            raise ValueError(f"vertex count must be nonnegative, got {vertex_count}")
        self.vertex_count = vertex_count
        self._arcs: dict[tuple[int, int], int] = {}
        self._out_deg = [0] * vertex_count
        self._in_deg = [0] * vertex_count
        self._total = 0

    def _check_vertex(self, u: int) -> None:
        if not 0 <= u < self.vertex_count:
            raise ValueError(
                f"vertex {u} out of range [0, {self.vertex_count - 1}]"
            )

    def add_arc(self, u: int, v: int, count: int = 1) -> "MultiDigraph":
        """Add ``count`` parallel arcs u -> v; returns self for chaining."""
        self._check_vertex(u)
        self._check_vertex(v)
        if count < 1:
            raise ValueError(f"arc count must be positive, got {count}")
        self._arcs[(u, v)] = self._arcs.get((u, v), 0) + count
        self._out_deg[u] += count
        self._in_deg[v] += count
        self._total += count
        return self

    def multiplicity(self, u: int, v: int) -> int:
        self._check_vertex(u)
        self._check_vertex(v)
        return self._arcs.get((u, v), 0)

    def arcs(self) -> list[tuple[int, int, int]]:
        """All arcs as (u, v, multiplicity), sorted by (u, v)."""
        return [(u, v, m) for (u, v), m in sorted(self._arcs.items())]

    @property
    def total_arcs(self) -> int:
        return self._total

    def out_degree(self, u: int) -> int:
        self._check_vertex(u)
        return self._out_deg[u]

    def in_degree(self, u: int) -> int:
        self._check_vertex(u)
        return self._in_deg[u]

    def is_d_regular(self, d: int) -> bool:
        """True when every vertex has in- and out-degree exactly d,
        multiplicities included."""
        if d < 1:
            raise ValueError(f"regularity degree must be positive, got {d}")
        return all(o == d for o in self._out_deg) and all(
            i == d for i in self._in_deg
        )

    def has_sink_or_source(self) -> bool:
        """True when some vertex has out-degree 0 or in-degree 0."""
        return any(o == 0 for o in self._out_deg) or any(
            i == 0 for i in self._in_deg
        )

    def dual(self) -> "MultiDigraph":
        """The graph with every arc reversed; an exact involution."""
        rev = MultiDigraph(self.vertex_count)
        for (u, v), m in self._arcs.items():
            rev.add_arc(v, u, m)
        return rev

    def copy(self) -> "MultiDigraph":
        g = MultiDigraph(self.vertex_count)
        for (u, v), m in self._arcs.items():
            g.add_arc(u, v, m)
        return g

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiDigraph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self._arcs == other._arcs

    __hash__ = None  # mutable while building

    def __repr__(self) -> str:
        return (
            f"MultiDigraph(vertices={self.vertex_count}, "
            f"arcs={self._total} on {len(self._arcs)} pairs)"
        )


def new_graph(vertex_count: int) -> MultiDigraph:
    """Graph with the given vertices and no arcs."""
    return MultiDigraph(vertex_count)


@dataclass(frozen=True)
class WalkCountMatrix:
    """Numbers of fixed-length walks, saturated at 2.

    ``data`` is the flat row-major matrix; entry (u, v) is the number of
    ``order``-walks u -> v counted with arc multiplicities and clamped to
    {0, 1, 2}, where 2 means "two or more".
    """

    order: int
    size: int
    data: bytes

    def count(self, u: int, v: int) -> int:
        if not (0 <= u < self.size and 0 <= v < self.size):
            raise ValueError(f"vertex pair ({u}, {v}) out of range")
        return self.data[u * self.size + v]

    def reaches(self, u: int, v: int) -> bool:
        return self.count(u, v) >= 1

    def first_multiple(self) -> tuple[int, int] | None:
        """Lexicographically smallest (u, v) with two or more walks."""
        idx = self.data.find(2)
        if idx < 0:
            return None
        return (idx // self.size, idx % self.size)

    def thresholded(self) -> bytes:
        """0/1 existence matrix."""
        return bytes(1 if c else 0 for c in self.data)


def adjacency_matrix(g: MultiDigraph) -> bytearray:
    """Flat row-major adjacency with multiplicities clamped at 2."""
    n = g.vertex_count
    mat = bytearray(n * n)
    for (u, v, m) in g.arcs():
        mat[u * n + v] = 2 if m > 1 else 1
    return mat


def walk_counts(g: MultiDigraph, n: int) -> WalkCountMatrix:
    """Saturating count of n-walks between every vertex pair.

    Order 0 is the identity relation; higher orders are built by repeated
    saturating matrix products, which is exact on the 0/1/2+ scale.
    """
    if n < 0:
        raise ValueError(f"walk length must be nonnegative, got {n}")
    size = g.vertex_count
    if n == 0:
        ident = bytearray(size * size)
        for u in range(size):
            ident[u * size + u] = 1
        return WalkCountMatrix(0, size, bytes(ident))
    acc = adjacency_matrix(g)
    if n > 1:
        adj = bytes(acc)
        for _ in range(n - 1):
            acc = sat_matmul(size, acc, adj)
    return WalkCountMatrix(n, size, bytes(acc))


# ---------------------------------------------------------------------------
# Serialization: edge-list text, DOT, and a JSON-compatible object.
# ---------------------------------------------------------------------------

def to_edgelist(g: MultiDigraph) -> str:
    """Edge-list text: header ``vertices N`` then ``u v m`` lines in
    (u, v) order."""
    lines = [f"vertices {g.vertex_count}"]
    lines.extend(f"{u} {v} {m}" for (u, v, m) in g.arcs())
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> MultiDigraph:
    """Parse the edge-list format; errors carry the offending line number.

    Blank lines and ``#`` comments are skipped.  Repeated (u, v) lines
    accumulate multiplicity.
    """
    g = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if g is None:
            if len(fields) != 2 or fields[0] != "vertices":
                raise ValueError(
                    f"line {lineno}: expected header 'vertices N', got {raw!r}"
                )
            try:
                count = int(fields[1])
            except ValueError:
                raise ValueError(
                    f"line {lineno}: vertex count {fields[1]!r} is not an integer"
                ) from None
            try:
                g = MultiDigraph(count)
            except ValueError as exc:
                raise ValueError(f"line {lineno}: {exc}") from None
            continue
        if len(fields) != 3:
            raise ValueError(
                f"line {lineno}: expected 'u v m' arc line, got {raw!r}"
            )
        try:
            u, v, m = (int(f) for f in fields)
        except ValueError:
            raise ValueError(
                f"line {lineno}: arc fields must be integers, got {raw!r}"
            ) from None
        try:
            g.add_arc(u, v, m)
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    if g is None:
        raise ValueError("line 1: empty input, expected header 'vertices N'")
    return g


def to_dot(g: MultiDigraph) -> str:
    """DOT text with one edge statement per parallel arc."""
    lines = ["digraph {"]
    for u in range(g.vertex_count):
        lines.append(f"  {u};")
    for (u, v, m) in g.arcs():
        lines.extend(f"  {u} -> {v};" for _ in range(m))
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_obj(g: MultiDigraph) -> dict:
    """JSON-compatible object {vertices, arcs: [[u, v, m], ...]} in
    (u, v) order."""
    return {
        "vertices": g.vertex_count,
        "arcs": [[u, v, m] for (u, v, m) in g.arcs()],
    }


def from_json_obj(obj: dict) -> MultiDigraph:
    try:
        count = obj["vertices"]
        arcs = obj["arcs"]
    except (TypeError, KeyError):
        raise ValueError(
            "graph object must have 'vertices' and 'arcs' keys"
        ) from None
    g = MultiDigraph(int(count))
    for entry in arcs:
        if len(entry) != 3:
            raise ValueError(f"arc entry must be [u, v, m], got {entry!r}")
        u, v, m = entry
        g.add_arc(int(u), int(v), int(m))
    return g
