"""Compare the compiled and pure-Python kernels on the hot operations.

Builds binary De Bruijn digraphs of growing dimension and times the
saturating walk-matrix product and the neighborhood-violation scan, which
dominate line-digraph recognition at larger sizes.  Run from the
repository root:

    python benchmarks/bench_backends.py [max_dimension]
"""

import sys
import time

from otislay import _kernels_py
from otislay.debruijn import DeBruijnParams, build_debruijn
from otislay.multidigraph import adjacency_matrix, walk_counts

try:
    from otislay import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def time_call(fn, *args, repeats=3):
    best = None
    for _ in range(repeats):
        start = time.perf_counter()
        fn(*args)
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best


def main():
    max_dim = int(sys.argv[1]) if len(sys.argv) > 1 else 9
    if _kernels_c is None:
        print("compiled kernels unavailable; timing the python backend only")
    header = f"{'graph':>10} {'n':>5} {'kernel':>22} {'python':>10}"
    if _kernels_c is not None:
        header += f" {'compiled':>10} {'speedup':>8}"
    print(header)
    for dim in range(6, max_dim + 1):
        g = build_debruijn(DeBruijnParams(2, dim), size_bound=2**max_dim)
        n = g.vertex_count
        adj = bytes(adjacency_matrix(g))
        square = bytes(walk_counts(g, 2).data)
        reach = walk_counts(g, dim).thresholded()
        cases = [
            ("sat_matmul", lambda impl: impl.sat_matmul(n, square, adj)),
            ("heuchenne_violation", lambda impl: impl.heuchenne_violation(n, reach)),
        ]
        for name, call in cases:
            py = time_call(call, _kernels_py)
            row = f"{'B(2,%d)' % dim:>10} {n:>5} {name:>22} {py:>9.4f}s"
            if _kernels_c is not None:
                cc = time_call(call, _kernels_c)
                ratio = py / cc if cc > 0 else float("inf")
                row += f" {cc:>9.4f}s {ratio:>7.1f}x"
            print(row)


if __name__ == "__main__":
    main()
