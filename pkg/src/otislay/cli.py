"""Command-line front end.

Exit codes: 0 when the requested property holds (or a report/graph was
produced), 1 when a checked property fails (not isomorphic, not a line
digraph, gcd test negative, conjecture counterexample), 2 for usage or
validation errors.  Output is byte-identical across runs with the same
inputs.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .canon import isomorphic
from .debruijn import DeBruijnParams, build_debruijn
from .heuchenne import is_nth_line_digraph
from .layouts import build_g, check_conjecture, enumerate_layouts, gcd_layout_test, orbits
from .limits import check_size
from .multidigraph import from_edgelist, to_dot, to_edgelist, to_json_obj
from .otis import OtisParams, build_h


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _serialize(g, fmt: str) -> str:
    if fmt == "edgelist":
        return to_edgelist(g)
    if fmt == "dot":
        return to_dot(g)
    if fmt == "json":
        return json.dumps(to_json_obj(g)) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def _load_graph(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return from_edgelist(text)
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from None


def cmd_construct(args) -> int:
    params = OtisParams(args.p, args.q, args.d)
    check_size(params.nodes, args.size_bound, what=f"H({args.p},{args.q},{args.d})")
    _emit(_serialize(build_h(params), args.format), args.output)
    return 0


def cmd_debruijn(args) -> int:
    g = build_debruijn(DeBruijnParams(args.d, args.n), size_bound=args.size_bound)
    _emit(_serialize(g, args.format), args.output)
    return 0


def cmd_orbits(args) -> int:
    perm = build_g(args.p_prime, args.q_prime)
    parts = orbits(perm)
    shown = " ".join("{" + ",".join(str(i) for i in part) + "}" for part in parts)
    cyclic = "yes" if len(parts) == 1 else "no"
    _emit(f"lambda={perm.lam}; orbits: {shown}; cyclic: {cyclic}\n", args.output)
    return 0


def cmd_layout_test(args) -> int:
    ok = gcd_layout_test(args.p_prime, args.n)
    g = math.gcd(args.p_prime, args.n + 1)
    verdict = "yes" if ok else "no"
    _emit(f"{verdict} (gcd({args.p_prime},{args.n + 1})={g})\n", args.output)
    return 0 if ok else 1


def cmd_line_check(args) -> int:
    if args.graph:
        g = _load_graph(args.graph)
        check_size(g.vertex_count, args.size_bound, what="input graph")
        name = args.graph
    else:
        if args.p is None or args.q is None or args.d is None:
            raise ValueError("line-check needs either --graph FILE or all of -p, -q, -d")
        params = OtisParams(args.p, args.q, args.d)
        check_size(params.nodes, args.size_bound, what=f"H({args.p},{args.q},{args.d})")
        g = build_h(params)
        name = f"H({args.p},{args.q},{args.d})"
    verdict = is_nth_line_digraph(g, args.n)
    if verdict.is_nth_line:
        _emit(
            f"yes: {name} satisfies the order-{args.n} line-digraph conditions\n",
            args.output,
        )
        return 0
    w = verdict.failure_witness
    if w.condition == "multiple-walks":
        detail = f"multiple {w.order}-walks between vertices {w.vertices[0]} and {w.vertices[1]}"
    else:
        detail = (
            f"walk-neighborhood condition of order {w.order} fails at "
            f"(u,v,w,x)={w.vertices}"
        )
    _emit(f"no: {name} is not an order-{args.n} line digraph ({detail})\n", args.output)
    return 1


def cmd_layouts(args) -> int:
    target = build_debruijn(DeBruijnParams(args.d, args.n), size_bound=args.size_bound)
    report = enumerate_layouts(target, args.d, debruijn_n=args.n, size_bound=args.size_bound)
    _emit(json.dumps(report.to_json_obj(), indent=2) + "\n", args.output)
    return 0


def cmd_conjecture(args) -> int:
    report = check_conjecture(args.d, args.n, size_bound=args.size_bound)
    lines = [f"d={report.d} n={report.n} vertices={report.layouts.vertices}"]
    pairs = " ".join(
        f"({c.p},{c.q}):{'yes' if c.isomorphic else 'no'}"
        for c in report.layouts.candidates
    )
    lines.append(f"pairs: {pairs}")
    lines.append(f"layouts: {report.layouts.layout_count}")
    if report.holds:
        lines.append(
            f"conjecture holds at (d={report.d}, n={report.n}): "
            f"every layout pair is a pair of powers of {report.d}"
        )
    else:
        shown = " ".join(f"({p},{q})" for p, q in report.counterexamples)
        lines.append(f"counterexamples: {shown}")
    _emit("\n".join(lines) + "\n", args.output)
    return 0 if report.holds else 1


def cmd_isomorphic(args) -> int:
    a = _load_graph(args.file_a)
    b = _load_graph(args.file_b)
    check_size(max(a.vertex_count, b.vertex_count), args.size_bound, what="input graph")
    same = isomorphic(a, b, size_bound=args.size_bound)
    _emit(("yes" if same else "no") + "\n", args.output)
    return 0 if same else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="otislay",
        description=(
            "Construct optical-transpose interconnect digraphs and De Bruijn "
            "digraphs, recognize iterated line digraphs, and enumerate layouts."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", metavar="PATH", help="write output to PATH")
    common.add_argument(
        "--size-bound",
        type=int,
        metavar="N",
        help="vertex-count guard (default 4096 or OTISLAY_SIZE_BOUND)",
    )

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument(
        "--format",
        choices=("edgelist", "dot", "json"),
        default="edgelist",
        help="graph serialization format (default edgelist)",
    )

    p = sub.add_parser(
        "construct",
        parents=[common, fmt],
        help="build the interconnect group digraph for (p, q, d)",
    )
    p.add_argument("-p", type=int, required=True, help="transmitter-side group count")
    p.add_argument("-q", type=int, required=True, help="receiver-side group count")
    p.add_argument("-d", type=int, required=True, help="electronic group size")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser(
        "debruijn",
        parents=[common, fmt],
        help="build the d-ary De Bruijn digraph of dimension n",
    )
    p.add_argument("-d", type=int, required=True, help="alphabet size")
    p.add_argument("-n", type=int, required=True, help="word length")
    p.set_defaults(func=cmd_debruijn)

    p = sub.add_parser(
        "orbits",
        parents=[common],
        help="orbit partition of the block-interleaving permutation",
    )
    p.add_argument("--p-prime", type=int, required=True, help="first split part")
    p.add_argument("--q-prime", type=int, required=True, help="second split part")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser(
        "layout-test",
        parents=[common],
        help="gcd test: is the dimension-n De Bruijn digraph realized at split p'",
    )
    p.add_argument("--p-prime", type=int, required=True, help="exponent split")
    p.add_argument("-n", type=int, required=True, help="De Bruijn dimension")
    p.set_defaults(func=cmd_layout_test)

    p = sub.add_parser(
        "line-check",
        parents=[common],
        help="recognize an order-n iterated line digraph",
    )
    p.add_argument("-p", type=int, help="transmitter-side group count")
    p.add_argument("-q", type=int, help="receiver-side group count")
    p.add_argument("-d", type=int, help="electronic group size")
    p.add_argument("--graph", metavar="FILE", help="edge-list graph file instead of (p, q, d)")
    p.add_argument("-n", type=int, required=True, help="line-digraph order to test")
    p.set_defaults(func=cmd_line_check)

    p = sub.add_parser(
        "layouts",
        parents=[common],
        help="enumerate all interconnect layouts of the (d, n) De Bruijn digraph",
    )
    p.add_argument("-d", type=int, required=True, help="alphabet size / degree")
    p.add_argument("-n", type=int, required=True, help="word length")
    p.set_defaults(func=cmd_layouts)

    p = sub.add_parser(
        "conjecture",
        parents=[common],
        help="probe whether every layout pair of the (d, n) De Bruijn digraph is a power pair",
    )
    p.add_argument("-d", type=int, required=True, help="alphabet size / degree")
    p.add_argument("-n", type=int, required=True, help="word length")
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser(
        "isomorphic",
        parents=[common],
        help="compare two edge-list graph files up to isomorphism",
    )
    p.add_argument("file_a", help="first edge-list file")
    p.add_argument("file_b", help="second edge-list file")
    p.set_defaults(func=cmd_isomorphic)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
