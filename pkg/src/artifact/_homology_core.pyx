# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled diagonalisation of integer matrices on 64-bit entries.

Raises OverflowError when an entry would leave the 64-bit range; callers
then retry with the pure-Python version.
"""
from libc.stdlib cimport malloc, free, llabs

cdef long long LIMIT = 4611686018427387903  # 2**62 - 1


cdef inline long long _floordiv(long long a, long long b):
    cdef long long q = a // b
    if (a % b != 0) and ((a < 0) != (b < 0)):
        q -= 1
    return q


cdef inline int _axpy(long long *dst, long long q, long long src) except -1:
    # dst -= q * src, with overflow checks
    if src == 0 or q == 0:
        return 0
    if llabs(q) > LIMIT // llabs(src):
        raise OverflowError("entry overflow")
    cdef long long prod = q * src
    cdef long long res = dst[0] - prod
    if llabs(res) > LIMIT:
        raise OverflowError("entry overflow")
    dst[0] = res
    return 0


def diagonalize(rows, Py_ssize_t ncols):
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t i, j, t, bi, bj
    cdef long long v, p, q, bv, tmp
    cdef long long *a = <long long *> malloc(max(1, nrows * ncols) * sizeof(long long))
    if a == NULL:
        raise MemoryError()
    pivots = []
    try:
        for i in range(nrows):
            r = rows[i]
            for j in range(ncols):
                v = r[j]
                if llabs(v) > LIMIT:
                    raise OverflowError("entry overflow")
                a[i * ncols + j] = v
        t = 0
        while t < nrows and t < ncols:
            bv = 0
            bi = -1
            bj = -1
            for i in range(t, nrows):
                for j in range(t, ncols):
                    v = llabs(a[i * ncols + j])
                    if v and (bv == 0 or v < bv):
                        bv = v
                        bi = i
                        bj = j
                if bv == 1:
                    break
            if bv == 0:
                break
            _swap_rows(a, ncols, t, bi)
            _swap_cols(a, nrows, ncols, t, bj)
            while True:
                p = a[t * ncols + t]
                clean = True
                for i in range(t + 1, nrows):
                    v = a[i * ncols + t]
                    if v:
                        q = _floordiv(v, p)
                        for j in range(t, ncols):
                            _axpy(&a[i * ncols + j], q, a[t * ncols + j])
                        if a[i * ncols + t]:
                            clean = False
                for j in range(t + 1, ncols):
                    v = a[t * ncols + j]
                    if v:
                        q = _floordiv(v, p)
                        for i in range(t, nrows):
                            _axpy(&a[i * ncols + j], q, a[i * ncols + t])
                        if a[t * ncols + j]:
                            clean = False
                if clean:
                    break
                bv = llabs(p)
                bi = t
                bj = t
                for i in range(t + 1, nrows):
                    v = llabs(a[i * ncols + t])
                    if v and v < bv:
                        bv = v
                        bi = i
                        bj = t
                for j in range(t + 1, ncols):
                    v = llabs(a[t * ncols + j])
                    if v and v < bv:
                        bv = v
                        bi = t
                        bj = j
                _swap_rows(a, ncols, t, bi)
                _swap_cols(a, nrows, ncols, t, bj)
            pivots.append(llabs(a[t * ncols + t]))
            t += 1
    finally:
        free(a)
    return pivots


cdef void _swap_rows(long long *a, Py_ssize_t ncols, Py_ssize_t r, Py_ssize_t s):
    cdef Py_ssize_t j
    cdef long long tmp
    if r == s:
        return
    for j in range(ncols):
        tmp = a[r * ncols + j]
        a[r * ncols + j] = a[s * ncols + j]
        a[s * ncols + j] = tmp


cdef void _swap_cols(long long *a, Py_ssize_t nrows, Py_ssize_t ncols, Py_ssize_t c, Py_ssize_t e):
    cdef Py_ssize_t i
    cdef long long tmp
    if c == e:
        return
    for i in range(nrows):
        tmp = a[i * ncols + c]
        a[i * ncols + c] = a[i * ncols + e]
        a[i * ncols + e] = tmp
