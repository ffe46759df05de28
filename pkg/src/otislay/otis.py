"""Optical-transpose interconnect: coordinate codec, link map, and the
group digraph.

Processors 0..pq-1 are laid out as p groups of q transmitters; the lens
planes send the transmitters of processor (i, j) to the receivers of
processor (q-1-j, p-1-i) read in the transposed (q, p) layout.  Bundling
consecutive runs of d processors into one node and keeping each optical
link as an arc yields a d-regular multidigraph on pq/d vertices; vertex k
stands for the processor interval [k*d, k*d + d - 1].
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .multidigraph import MultiDigraph


@dataclass(frozen=True)
class OtisParams:
    """Validated (p, q, d): group counts and electronic group size."""

    p: int
    q: int
    d: int

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise ValueError(f"p and q must be positive, got p={self.p}, q={self.q}")
        if self.d <= 1:
            raise ValueError(f"d must be greater than 1, got d={self.d}")
        if (self.p * self.q) % self.d != 0:
            raise ValueError(
                f"d does not divide pq ({self.d} does not divide {self.p * self.q})"
            )

    @property
    def processors(self) -> int:
        return self.p * self.q

    @property
    def nodes(self) -> int:
        return self.p * self.q // self.d


class Coord(NamedTuple):
    """(p, q)-coordinates of a processor label: label = i*q + j."""

    i: int
    j: int


def encode(i: int, j: int, p: int, q: int) -> int:
    """Processor label of coordinates (i, j) in a (p, q) layout."""
    if not 0 <= i < p:
        raise ValueError(f"first coordinate {i} out of range [0, {p - 1}]")
    if not 0 <= j < q:
        raise ValueError(f"second coordinate {j} out of range [0, {q - 1}]")
    return i * q + j


def decode(a: int, p: int, q: int) -> Coord:
    """Coordinates (a div q, a mod q) of processor label a."""
    if not 0 <= a < p * q:
        raise ValueError(f"label {a} out of range [0, {p * q - 1}]")
    return Coord(a // q, a % q)


def otis_link(a: int, p: int, q: int) -> int:
    """Target of the optical link from processor a in a (p, q) layout.

    Both coordinates are transposed and mirrored: (i, j) goes to
    (q-1-j, p-1-i) read in the (q, p) layout.  Following a link and then
    its (q, p) counterpart returns to the start, so the map is a bijection.
    """
    i, j = decode(a, p, q)
    return encode(q - 1 - j, p - 1 - i, q, p)


def group_of(a: int, d: int) -> int:
    """Index of the electronic group [k*d, k*d + d - 1] containing a."""
    if a < 0:
        raise ValueError(f"label must be nonnegative, got {a}")
    if d <= 1:
        raise ValueError(f"d must be greater than 1, got {d}")
    return a // d


def build_h(params: OtisParams) -> MultiDigraph:
    """Group digraph of the interconnect: pq/d vertices, one arc per
    optical link, multiplicities accumulated.

    The result is d-regular with exactly pq arcs, and reversing every arc
    gives exactly the graph built from the transposed (q, p, d) parameters
    under the same vertex labeling.
    """
    p, q, d = params.p, params.q, params.d
    g = MultiDigraph(params.nodes)
    for a in range(params.processors):
        g.add_arc(group_of(a, d), group_of(otis_link(a, p, q), d))
    return g
