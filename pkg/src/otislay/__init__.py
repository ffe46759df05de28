"""Optical-transpose interconnect digraphs, De Bruijn digraphs,
line-digraph recognition, and layout search."""

from ._backend import backend_name
from .canon import CanonicalForm, canonical_form, isomorphic, refine_colors
from .debruijn import (
    DeBruijnParams,
    build_debruijn,
    build_kd_plus,
    iterate_line,
    line_digraph,
)
from .heuchenne import (
    FailureWitness,
    LineRecognitionVerdict,
    has_multiple_n_walks,
    heuchenne_condition,
    is_nth_line_digraph,
)
from .layouts import (
    ConjectureReport,
    LayoutCandidate,
    LayoutPermutation,
    LayoutReport,
    build_g,
    check_conjecture,
    enumerate_layouts,
    euler_totient,
    gcd_layout_test,
    is_cyclic,
    line_digraph_layout_test,
    orbits,
)
from .multidigraph import (
    MultiDigraph,
    WalkCountMatrix,
    from_edgelist,
    from_json_obj,
    new_graph,
    to_dot,
    to_edgelist,
    to_json_obj,
    walk_counts,
)
from .otis import Coord, OtisParams, build_h, decode, encode, group_of, otis_link

__version__ = "0.1.0"

__all__ = [
    "CanonicalForm",
    "ConjectureReport",
    "Coord",
    "DeBruijnParams",
    "FailureWitness",
    "LayoutCandidate",
    "LayoutPermutation",
    "LayoutReport",
    "LineRecognitionVerdict",
    "MultiDigraph",
    "OtisParams",
    "WalkCountMatrix",
    "backend_name",
    "build_debruijn",
    "build_g",
    "build_h",
    "build_kd_plus",
    "canonical_form",
    "check_conjecture",
    "decode",
    "encode",
    "enumerate_layouts",
    "euler_totient",
    "from_edgelist",
    "from_json_obj",
    "gcd_layout_test",
    "group_of",
    "has_multiple_n_walks",
    "heuchenne_condition",
    "is_cyclic",
    "is_nth_line_digraph",
    "isomorphic",
    "iterate_line",
    "line_digraph",
    "line_digraph_layout_test",
    "new_graph",
    "orbits",
    "otis_link",
    "refine_colors",
    "to_dot",
    "to_edgelist",
    "to_json_obj",
    "walk_counts",
]
