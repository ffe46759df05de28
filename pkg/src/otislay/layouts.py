"""Layout search: when does a digraph arise as the group digraph of an
optical-transpose interconnect?

The centerpiece is a three-branch permutation on [0, n-1] built from a
split n + 1 = p' + q': the first q'-1 points shift up by p', the point
q'-1 wraps to p'-1, and the rest shift down by q'.  Every step moves a
point by a multiple of gcd(p', q'), and the orbits are exactly the
residue classes modulo that gcd; in particular the permutation is a
single cycle precisely when gcd(p', n+1) = 1, which is the fast test for
whether the d-ary De Bruijn digraph of dimension n is realized by the
interconnect on d^p' by d^q' groups.

Layout enumeration runs over all divisor pairs (p, q) of d * |V|, builds
each candidate group digraph, and decides isomorphism by canonical
forms, recording cheaper corroborating evidence where it applies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .canon import isomorphic
from .debruijn import build_debruijn, DeBruijnParams
from .limits import check_size
from .multidigraph import MultiDigraph
from .otis import OtisParams, build_h


@dataclass(frozen=True)
class LayoutPermutation:
    """The block-interleaving permutation for a split n + 1 = p' + q'.

    ``mapping`` is the image list on [0, n-1]; ``lam`` is gcd(p', q'),
    the number of orbits.  Every image satisfies
    mapping[i] = i (mod lam).
    """

    p_prime: int
    q_prime: int
    n: int
    mapping: tuple[int, ...]
    lam: int

    def apply(self, i: int) -> int:
        return self.mapping[i]


def build_g(p_prime: int, q_prime: int) -> LayoutPermutation:
    """Three-branch permutation on [0, p'+q'-2]: i + p' below q'-1,
    p'-1 at q'-1, and i - q' from q' up."""
    if p_prime < 1 or q_prime < 1:
        raise ValueError(
            f"both split parts must be positive, got ({p_prime}, {q_prime})"
        )
    n = p_prime + q_prime - 1
    mapping = []
    for i in range(n):
        if i <= q_prime - 2:
            mapping.append(i + p_prime)
        elif i == q_prime - 1:
            mapping.append(p_prime - 1)
        else:
            mapping.append(i - q_prime)
    return LayoutPermutation(
        p_prime, q_prime, n, tuple(mapping), math.gcd(p_prime, q_prime)
    )


def orbits(perm: LayoutPermutation) -> list[list[int]]:
    """Orbit partition of [0, n-1]; orbits sorted internally and listed by
    smallest member."""
    seen = [False] * perm.n
    parts = []
    for start in range(perm.n):
        if seen[start]:
            continue
        orbit = []
        i = start
        while not seen[i]:
            seen[i] = True
            orbit.append(i)
            i = perm.mapping[i]
        parts.append(sorted(orbit))
    return parts


def is_cyclic(perm: LayoutPermutation) -> bool:
    """True when the permutation is a single cycle on its whole domain."""
    return len(orbits(perm)) == 1


def gcd_layout_test(p_prime: int, n: int) -> bool:
    """Fast layout test: gcd(p', n+1) = 1, for p' in [0, n+1].

    The boundary values 0 and n+1 give gcd n+1 and test false for n >= 1.
    """
    if n < 1:
        raise ValueError(f"dimension must be at least 1, got {n}")
    if not 0 <= p_prime <= n + 1:
        raise ValueError(f"exponent {p_prime} out of range [0, {n + 1}]")
    return math.gcd(p_prime, n + 1) == 1


def euler_totient(m: int) -> int:
    """Count of integers in [1, m] coprime to m, by trial factorization."""
    if m < 1:
        raise ValueError(f"totient argument must be positive, got {m}")
    result = m
    rest = m
    f = 2
    while f * f <= rest:
        if rest % f == 0:
            while rest % f == 0:
                rest //= f
            result -= result // f
        f += 1
    if rest > 1:
        result -= result // rest
    return result


def line_digraph_layout_test(p: int, q: int, d: int) -> bool:
    """The candidate group digraph is a line digraph exactly when d
    divides gcd(p, q)."""
    OtisParams(p, q, d)
    return math.gcd(p, q) % d == 0


def _power_exponent(x: int, base: int):
    """e with base**e == x, or None."""
    if x < 1:
        return None
    e = 0
    while x % base == 0:
        x //= base
        e += 1
    return e if x == 1 else None


@dataclass(frozen=True)
class LayoutCandidate:
    p: int
    q: int
    isomorphic: bool
    evidence: str


@dataclass(frozen=True)
class LayoutReport:
    """All divisor pairs (p, q) with p*q = d*|V|, with per-pair verdicts.

    ``min_p_plus_q`` is the least p + q over positive pairs (fewest
    lenses), None when no layout exists; ``best_pair`` is the first pair
    attaining it in ascending-p order.
    """

    d: int
    vertices: int
    candidates: tuple[LayoutCandidate, ...]
    layout_count: int
    min_p_plus_q: int | None
    best_pair: tuple[int, int] | None = field(default=None, compare=False)

    def positive_pairs(self) -> list[tuple[int, int]]:
        return [(c.p, c.q) for c in self.candidates if c.isomorphic]

    def to_json_obj(self) -> dict:
        return {
            "d": self.d,
            "vertices": self.vertices,
            "candidates": [
                {"p": c.p, "q": c.q, "isomorphic": c.isomorphic, "evidence": c.evidence}
                for c in self.candidates
            ],
            "layout_count": self.layout_count,
            "min_p_plus_q": self.min_p_plus_q,
        }


def enumerate_layouts(
    target: MultiDigraph,
    d: int,
    debruijn_n: int | None = None,
    size_bound=None,
) -> LayoutReport:
    """Decide, for every divisor pair (p, q) of d * |V(target)|, whether
    the target is isomorphic to the candidate group digraph.

    Canonical-form comparison is the final arbiter for every pair.  When
    the target is known to be the d-ary De Bruijn digraph of dimension
    ``debruijn_n``, two cheaper evidence paths are recorded and checked
    against it: the gcd test when both p and q are powers of d, and the
    line-digraph exclusion (d must divide gcd(p, q)) for dimension >= 2,
    where the target is itself a line digraph.
    """
    if d <= 1:
        raise ValueError(f"d must be greater than 1, got {d}")
    if not target.is_d_regular(d):
        raise ValueError(
            f"layout enumeration requires a {d}-regular target "
            f"(counting multiplicities)"
        )
    check_size(target.vertex_count, size_bound, what="layout enumeration target")

    total = d * target.vertex_count
    candidates = []
    for p in range(1, total + 1):
        if total % p != 0:
            continue
        q = total // p
        h = build_h(OtisParams(p, q, d))
        verdict = isomorphic(h, target, size_bound=size_bound)

        evidence = "canonical-form"
        if debruijn_n is not None:
            a = _power_exponent(p, d)
            b = _power_exponent(q, d)
            if a is not None and b is not None:
                fast = math.gcd(a, debruijn_n + 1) == 1
                if fast != verdict:
                    raise RuntimeError(
                        f"gcd fast path disagrees with canonical forms at "
                        f"(p={p}, q={q}, d={d}): fast={fast}, canonical={verdict}"
                    )
                evidence = f"gcd({a},{debruijn_n + 1})" + ("=1" if fast else ">1")
            elif debruijn_n >= 2 and not line_digraph_layout_test(p, q, d):
                if verdict:
                    raise RuntimeError(
                        f"line-digraph exclusion disagrees with canonical "
                        f"forms at (p={p}, q={q}, d={d})"
                    )
                evidence = "line-digraph-exclusion"
        candidates.append(LayoutCandidate(p, q, verdict, evidence))

    positives = [(c.p, c.q) for c in candidates if c.isomorphic]
    best = min(positives, key=lambda pq: (pq[0] + pq[1], pq[0])) if positives else None
    return LayoutReport(
        d=d,
        vertices=target.vertex_count,
        candidates=tuple(candidates),
        layout_count=len(positives),
        min_p_plus_q=best[0] + best[1] if best else None,
        best_pair=best,
    )


@dataclass(frozen=True)
class ConjectureReport:
    """Outcome of probing one (d, n): positive pairs must all be
    power-of-d pairs; anything else is a counterexample."""

    d: int
    n: int
    holds: bool
    counterexamples: tuple[tuple[int, int], ...]
    layouts: LayoutReport


def check_conjecture(d: int, n: int, size_bound=None) -> ConjectureReport:
    """Enumerate every layout of the d-ary dimension-n De Bruijn digraph
    and flag positive pairs whose coordinates are not both powers of d.

    Each power-of-d pair is cross-checked against the gcd test, and each
    pair failing the line-digraph divisibility condition is cross-checked
    to be negative (the target is a line digraph).
    """
    target = build_debruijn(DeBruijnParams(d, n), size_bound=size_bound)
    report = enumerate_layouts(target, d, debruijn_n=n, size_bound=size_bound)

    counterexamples = []
    for c in report.candidates:
        a = _power_exponent(c.p, d)
        b = _power_exponent(c.q, d)
        if a is not None and b is not None:
            if gcd_layout_test(a, n) != c.isomorphic:
                raise RuntimeError(
                    f"gcd layout test disagrees with enumeration at "
                    f"(p={c.p}, q={c.q}, d={d}, n={n})"
                )
        elif c.isomorphic:
            counterexamples.append((c.p, c.q))
        if not line_digraph_layout_test(c.p, c.q, d) and c.isomorphic:
            raise RuntimeError(
                f"a layout pair (p={c.p}, q={c.q}) fails the line-digraph "
                f"divisibility condition although the target is a line digraph"
            )
    return ConjectureReport(
        d=d,
        n=n,
        holds=not counterexamples,
        counterexamples=tuple(counterexamples),
        layouts=report,
    )
