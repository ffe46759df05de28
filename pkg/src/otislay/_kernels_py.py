"""Pure-Python kernels for the saturating walk algebra.

Matrices are flat row-major ``bytes``/``bytearray`` buffers of length n*n
with entries in {0, 1, 2}, where 2 stands for "two or more".  Rows and
columns are packed into Python integers so the inner loops run on machine
words instead of per-entry bytecode; results are bit-for-bit identical to
the compiled twin in ``_kernels.pyx``.
"""

BACKEND_NAME = "python"


def _pack_rows(n, m):
    ones = []
    twos = []
    for u in range(n):
        base = u * n
        r1 = 0
        r2 = 0
        for w in range(n):
            c = m[base + w]
            if c:
                r1 |= 1 << w
                if c > 1:
                    r2 |= 1 << w
        ones.append(r1)
        twos.append(r2)
    return ones, twos


def _pack_cols(n, m):
    ones = [0] * n
    twos = [0] * n
    for w in range(n):
        base = w * n
        bit = 1 << w
        for v in range(n):
            c = m[base + v]
            if c:
                ones[v] |= bit
                if c > 1:
                    twos[v] |= bit
    return ones, twos


def sat_matmul(n, a, b):
    """Product of two saturating count matrices, saturated at 2.

    Entry (u, v) is sum_w a(u,w)*b(w,v) clamped into {0, 1, 2}; clamping
    commutes with the product, so chains of products stay exact on the
    0/1/2+ scale.
    """
    out = bytearray(n * n)
    if n == 0:
        return out
    a1, a2 = _pack_rows(n, a)
    b1, b2 = _pack_cols(n, b)
    for u in range(n):
        au1 = a1[u]
        au2 = a2[u]
        base = u * n
        for v in range(n):
            inter = au1 & b1[v]
            if not inter:
                continue
            # >=2 when two distinct middle vertices contribute, or a single
            # one contributes through a multiplicity-2 entry on either side.
            if (inter & (inter - 1)) or (inter & (au2 | b2[v])):
                out[base + v] = 2
            else:
                out[base + v] = 1
    return out


def heuchenne_violation(n, reach):
    """First ordered pair (u, v) with overlapping but non-nested rows.

    ``reach`` is a 0/1 matrix.  Returns the lexicographically smallest
    (u, v) such that rows u and v share a member while row v has a member
    outside row u, or None when every two rows are nested-or-disjoint
    (which for this symmetric scan means equal-or-disjoint).
    """
    rows = []
    for u in range(n):
        base = u * n
        r = 0
        for w in range(n):
            if reach[base + w]:
                r |= 1 << w
        rows.append(r)
    for u in range(n):
        ru = rows[u]
        for v in range(n):
            rv = rows[v]
            if (ru & rv) and (rv & ~ru):
                return (u, v)
    return None
