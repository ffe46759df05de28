"""Exact multidigraph isomorphism at desk scale.

Canonical labeling by color refinement plus backtracking
individualization.  Refinement repeatedly replaces each vertex color with
its signature (old color, sorted multiset of in-neighbor (color,
multiplicity) pairs, same for out-neighbors) until the partition
stabilizes; when a stable partition still has a class of two or more
vertices, every member of the first such class is individualized in turn
and the candidate labelings are compared, keeping the lexicographically
least relabeled arc list.  Weakly connected components are labeled
independently and merged in a fixed order, which keeps graphs made of
many interchangeable pieces cheap.

Multiplicities enter the refinement signature, so parallel arcs are
distinguished, and the target graphs here are regular, so plain degree
invariants would be useless anyway.
"""

from __future__ import annotations

from dataclasses import dataclass

from .limits import check_size
from .multidigraph import MultiDigraph


@dataclass(frozen=True)
class CanonicalForm:
    """Order-independent fingerprint: two graphs are isomorphic exactly
    when their forms are equal."""

    vertex_count: int
    canonical_arcs: tuple[tuple[int, int, int], ...]


def _adjacency_lists(g: MultiDigraph):
    out_adj = [[] for _ in range(g.vertex_count)]
    in_adj = [[] for _ in range(g.vertex_count)]
    for (u, v, m) in g.arcs():
        out_adj[u].append((v, m))
        in_adj[v].append((u, m))
    return out_adj, in_adj


def _refine(out_adj, in_adj, colors):
    """Refine until stable; returns dense color ids ordered by signature."""
    n = len(colors)
    class_count = len(set(colors))
    while True:
        sigs = []
        for u in range(n):
            ins = tuple(sorted((colors[w], m) for (w, m) in in_adj[u]))
            outs = tuple(sorted((colors[w], m) for (w, m) in out_adj[u]))
            sigs.append((colors[u], ins, outs))
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        if len(order) == class_count:
            # old color is part of the signature, so classes only ever
            # split; an unchanged count means an unchanged partition.
            return new
        colors = new
        class_count = len(order)


def refine_colors(g: MultiDigraph, initial) -> list[int]:
    """Stable coloring refining the given initial one.

    The result uses dense ids 0..k-1; refining a stable dense coloring
    returns it unchanged.
    """
    initial = list(initial)
    if len(initial) != g.vertex_count:
        raise ValueError(
            f"initial coloring has {len(initial)} entries for "
            f"{g.vertex_count} vertices"
        )
    out_adj, in_adj = _adjacency_lists(g)
    return _refine(out_adj, in_adj, initial)


def _individualize(colors, v):
    """Split v's class into {v} (keeping the class color) and the rest
    (shifted just after); higher classes shift up by one."""
    cv = colors[v]
    new = [c + 1 if c > cv else c for c in colors]
    for u, c in enumerate(colors):
        if c == cv and u != v:
            new[u] = cv + 1
    return new


def _canon_connected(out_adj, in_adj, arcs, initial):
    """Least relabeled arc list over the individualization tree.

    Whenever two leaves produce the same candidate arc list, the composed
    relabeling is an automorphism; a sibling branch is skipped when a known
    automorphism fixing the current individualized prefix maps it onto an
    already-covered sibling, whose subtree yields the same candidates.
    """
    n = len(out_adj)
    best = None
    best_inverse = None  # label -> vertex for the current best leaf
    autos = []
    seen_autos = set()

    def visit(colors, prefix):
        nonlocal best, best_inverse
        counts = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        if len(counts) == n:
            cand = tuple(sorted((colors[u], colors[v], m) for (u, v, m) in arcs))
            if best is None or cand < best:
                best = cand
                best_inverse = [0] * n
                for v, label in enumerate(colors):
                    best_inverse[label] = v
            elif cand == best:
                sigma = tuple(best_inverse[label] for label in colors)
                if sigma not in seen_autos:
                    seen_autos.add(sigma)
                    autos.append(sigma)
            return
        target = min(c for c, k in counts.items() if k > 1)
        covered = set()
        for v in range(n):
            if colors[v] != target:
                continue
            skip = False
            for sigma in autos:
                if sigma[v] in covered and all(sigma[u] == u for u in prefix):
                    skip = True
                    break
            covered.add(v)
            if skip:
                continue
            prefix.append(v)
            visit(_refine(out_adj, in_adj, _individualize(colors, v)), prefix)
            prefix.pop()

    visit(_refine(out_adj, in_adj, list(initial)), [])
    return best if best is not None else ()


def _twin_classes(g: MultiDigraph, colors):
    """Maximal vertex classes in which every transposition of two members
    is an automorphism.

    Two vertices qualify when they have equal loops, equal multiplicities
    toward each other, and identical in/out multiplicity maps over all
    other vertices.  The relation is transitive, so each vertex is only
    compared against one representative per class, and only within its
    refinement color (twins always share a stable color).
    """
    n = g.vertex_count
    outs = [{} for _ in range(n)]
    ins = [{} for _ in range(n)]
    for (u, v, m) in g.arcs():
        outs[u][v] = m
        ins[v][u] = m

    def are_twins(u, v):
        if outs[u].get(u, 0) != outs[v].get(v, 0):
            return False
        if outs[u].get(v, 0) != outs[v].get(u, 0):
            return False
        skip = (u, v)
        if {w: m for w, m in outs[u].items() if w not in skip} != {
            w: m for w, m in outs[v].items() if w not in skip
        }:
            return False
        return {w: m for w, m in ins[u].items() if w not in skip} == {
            w: m for w, m in ins[v].items() if w not in skip
        }

    by_color = {}
    for v, c in enumerate(colors):
        by_color.setdefault(c, []).append(v)
    classes = []
    for c in sorted(by_color):
        reps = []  # (representative, index into classes)
        for v in by_color[c]:
            for rep, idx in reps:
                if are_twins(rep, v):
                    classes[idx].append(v)
                    break
            else:
                reps.append((v, len(classes)))
                classes.append([v])
    classes.sort(key=lambda cls: cls[0])
    return classes


def _canon_component(g: MultiDigraph):
    """Canonical arc tuple for one weakly connected graph.

    Twin classes are first contracted to single quotient vertices carrying
    (size, loop multiplicity, intra-class multiplicity) attributes; the
    quotient is canonically labeled starting from the attribute coloring
    and then expanded back.  Without the contraction, graphs built from
    parallel arcs (whose line digraphs contain large sets of mutually
    interchangeable vertices) would make the backtracking search
    factorial.
    """
    n = g.vertex_count
    out_adj, in_adj = _adjacency_lists(g)
    base = _refine(out_adj, in_adj, [0] * n)
    classes = _twin_classes(g, base)
    if all(len(cls) == 1 for cls in classes):
        return _canon_connected(out_adj, in_adj, g.arcs(), [0] * n)

    mult = {(u, v): m for (u, v, m) in g.arcs()}
    attrs = []
    for cls in classes:
        u = cls[0]
        loop = mult.get((u, u), 0)
        off = mult.get((u, cls[1]), 0) if len(cls) > 1 else 0
        attrs.append((len(cls), loop, off))

    quotient = MultiDigraph(len(classes))
    for i, ci in enumerate(classes):
        for j, cj in enumerate(classes):
            if i != j:
                m = mult.get((ci[0], cj[0]), 0)
                if m:
                    quotient.add_arc(i, j, m)

    attr_rank = {a: r for r, a in enumerate(sorted(set(attrs)))}
    q_out, q_in = _adjacency_lists(quotient)
    q_arcs = _canon_connected(
        q_out, q_in, quotient.arcs(), [attr_rank[a] for a in attrs]
    )

    # canonical labels refine the attribute coloring, so the classes appear
    # in ascending attribute order; expand them back in that order.
    ordered_attrs = sorted(attrs)
    offsets = [0] * len(ordered_attrs)
    for i in range(1, len(ordered_attrs)):
        offsets[i] = offsets[i - 1] + ordered_attrs[i - 1][0]
    expanded = []
    for i, (size, loop, off) in enumerate(ordered_attrs):
        start = offsets[i]
        for a in range(size):
            if loop:
                expanded.append((start + a, start + a, loop))
            if off:
                expanded.extend(
                    (start + a, start + b, off) for b in range(size) if b != a
                )
    for (i, j, m) in q_arcs:
        si, ni = offsets[i], ordered_attrs[i][0]
        sj, nj = offsets[j], ordered_attrs[j][0]
        expanded.extend(
            (si + a, sj + b, m) for a in range(ni) for b in range(nj)
        )
    return tuple(sorted(expanded))


def _weak_components(g: MultiDigraph):
    """Vertex lists of weakly connected components, each sorted."""
    n = g.vertex_count
    neighbors = [[] for _ in range(n)]
    for (u, v, _) in g.arcs():
        if u != v:
            neighbors[u].append(v)
            neighbors[v].append(u)
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        stack = [start]
        comp = []
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in neighbors[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def canonical_form(g: MultiDigraph, size_bound=None) -> CanonicalForm:
    """Canonical form of g; invariant under any relabeling of g."""
    check_size(g.vertex_count, size_bound, what="canonical labeling")
    comps = _weak_components(g)
    if len(comps) <= 1:
        return CanonicalForm(g.vertex_count, _canon_component(g))

    pieces = []
    for comp in comps:
        index = {v: i for i, v in enumerate(comp)}
        sub = MultiDigraph(len(comp))
        for (u, v, m) in g.arcs():
            if u in index:
                sub.add_arc(index[u], index[v], m)
        pieces.append((len(comp), _canon_component(sub)))
    pieces.sort()

    merged = []
    offset = 0
    for size, arcs in pieces:
        merged.extend((u + offset, v + offset, m) for (u, v, m) in arcs)
        offset += size
    return CanonicalForm(g.vertex_count, tuple(merged))


def isomorphic(a: MultiDigraph, b: MultiDigraph, size_bound=None) -> bool:
    """True exactly when an arc-multiplicity-preserving vertex bijection
    exists, decided by comparing canonical forms."""
    if a.vertex_count != b.vertex_count or a.total_arcs != b.total_arcs:
        return False
    return canonical_form(a, size_bound) == canonical_form(b, size_bound)
