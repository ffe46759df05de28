# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled kernels for the saturating walk algebra.

Same contracts as ``_kernels_py``: flat row-major byte matrices with
entries in {0, 1, 2}.  Rows/columns are packed into 64-bit words so both
kernels run in roughly n*n*n/64 word operations.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport calloc, free

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil

BACKEND_NAME = "compiled"


cdef inline void _pack_rows(Py_ssize_t n, Py_ssize_t words,
                            const unsigned char[::1] m,
                            uint64_t *ones, uint64_t *twos) noexcept nogil:
    cdef Py_ssize_t u, w
    cdef unsigned char c
    for u in range(n):
        for w in range(n):
            c = m[u * n + w]
            if c:
                ones[u * words + (w >> 6)] |= (<uint64_t>1) << (w & 63)
                if c > 1:
                    twos[u * words + (w >> 6)] |= (<uint64_t>1) << (w & 63)


cdef inline void _pack_cols(Py_ssize_t n, Py_ssize_t words,
                            const unsigned char[::1] m,
                            uint64_t *ones, uint64_t *twos) noexcept nogil:
    cdef Py_ssize_t w, v
    cdef unsigned char c
    for w in range(n):
        for v in range(n):
            c = m[w * n + v]
            if c:
                ones[v * words + (w >> 6)] |= (<uint64_t>1) << (w & 63)
                if c > 1:
                    twos[v * words + (w >> 6)] |= (<uint64_t>1) << (w & 63)


def sat_matmul(Py_ssize_t n, const unsigned char[::1] a, const unsigned char[::1] b):
    """Product of two saturating count matrices, saturated at 2."""
    out = bytearray(n * n)
    if n == 0:
        return out
    cdef unsigned char[::1] o = out
    cdef Py_ssize_t words = (n + 63) >> 6
    cdef uint64_t *a1 = <uint64_t *>calloc(n * words, sizeof(uint64_t))
    cdef uint64_t *a2 = <uint64_t *>calloc(n * words, sizeof(uint64_t))
    cdef uint64_t *b1 = <uint64_t *>calloc(n * words, sizeof(uint64_t))
    cdef uint64_t *b2 = <uint64_t *>calloc(n * words, sizeof(uint64_t))
    if a1 == NULL or a2 == NULL or b1 == NULL or b2 == NULL:
        free(a1); free(a2); free(b1); free(b2)
        raise MemoryError()
    cdef Py_ssize_t u, v, k, cnt
    cdef uint64_t x
    cdef bint sat
    with nogil:
        _pack_rows(n, words, a, a1, a2)
        _pack_cols(n, words, b, b1, b2)
        for u in range(n):
            for v in range(n):
                cnt = 0
                sat = False
                for k in range(words):
                    x = a1[u * words + k] & b1[v * words + k]
                    if x:
                        if x & (a2[u * words + k] | b2[v * words + k]):
                            sat = True
                            break
                        cnt += __builtin_popcountll(x)
                        if cnt > 1:
                            sat = True
                            break
                if sat:
                    o[u * n + v] = 2
                elif cnt == 1:
                    o[u * n + v] = 1
    free(a1); free(a2); free(b1); free(b2)
    return out


def heuchenne_violation(Py_ssize_t n, const unsigned char[::1] reach):
    """First ordered pair (u, v) with overlapping but non-nested rows."""
    if n == 0:
        return None
    cdef Py_ssize_t words = (n + 63) >> 6
    cdef uint64_t *rows = <uint64_t *>calloc(n * words, sizeof(uint64_t))
    if rows == NULL:
        raise MemoryError()
    cdef Py_ssize_t u, v, w, k
    cdef Py_ssize_t found_u = -1, found_v = -1
    cdef bint common, extra
    with nogil:
        for u in range(n):
            for w in range(n):
                if reach[u * n + w]:
                    rows[u * words + (w >> 6)] |= (<uint64_t>1) << (w & 63)
        for u in range(n):
            if found_u >= 0:
                break
            for v in range(n):
                common = False
                extra = False
                for k in range(words):
                    if rows[u * words + k] & rows[v * words + k]:
                        common = True
                    if rows[v * words + k] & ~rows[u * words + k]:
                        extra = True
                    if common and extra:
                        break
                if common and extra:
                    found_u = u
                    found_v = v
                    break
    free(rows)
    if found_u < 0:
        return None
    return (found_u, found_v)
