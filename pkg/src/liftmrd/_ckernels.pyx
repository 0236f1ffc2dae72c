# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled GF(q) elimination kernels.

Same functions and signatures as ``liftmrd._pykernels``. Fields without
kernel tables (q > 256) are delegated to the pure-Python implementation.
"""

import numpy as np

from . import _pykernels

ctypedef const int[:, ::1] table2d
ctypedef const int[::1] table1d


cdef int _eliminate(int[:, ::1] W, int nrows, int ncols, table2d add, table2d mul,
                    table1d neg, table1d inv, bint full) noexcept nogil:
    cdef int r = 0, c, i, j, piv, f, t, nt, tmp
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if W[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, ncols):
                tmp = W[r, j]
                W[r, j] = W[piv, j]
                W[piv, j] = tmp
        f = inv[W[r, c]]
        if f != 1:
            for j in range(c, ncols):
                W[r, j] = mul[f, W[r, j]]
        for i in range(0 if full else r + 1, nrows):
            if i == r:
                continue
            t = W[i, c]
            if t != 0:
                nt = neg[t]
                for j in range(c, ncols):
                    W[i, j] = add[W[i, j], mul[nt, W[r, j]]]
        r += 1
    return r


cdef inline void _copy_rows(const int[:, ::1] src, int[:, ::1] dst, int offset) noexcept nogil:
    cdef Py_ssize_t i, j
    for i in range(src.shape[0]):
        for j in range(src.shape[1]):
            dst[offset + i, j] = src[i, j]


cdef int _min_pair_injection(const int[:, :, ::1] B, int[:, ::1] W, int k, int n, table2d add,
                             table2d mul, table1d neg, table1d inv) noexcept nogil:
    cdef Py_ssize_t a, b, count = B.shape[0]
    cdef int best = -1, dist
    for a in range(count):
        for b in range(a + 1, count):
            _copy_rows(B[a], W, 0)
            _copy_rows(B[b], W, k)
            dist = _eliminate(W, 2 * k, n, add, mul, neg, inv, False) - k
            if dist > 0 and (best < 0 or dist < best):
                best = dist
                # 1 is the least distance between distinct subspaces
                if best == 1:
                    return 1
    return best


def _as3d(seq, int inner, int cols):
    arr = np.asarray(seq, dtype=np.int32)
    return np.ascontiguousarray(arr.reshape(len(seq), inner, cols))


def rank(rows, int ncols, field):
    if field.kernel_tables is None:
        return _pykernels.rank(rows, ncols, field)
    add, mul, neg, inv = field.kernel_tables
    nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return 0
    W = np.ascontiguousarray(np.asarray(rows, dtype=np.int32).reshape(nrows, ncols))
    return _eliminate(W, nrows, ncols, add, mul, neg, inv, False)


def rref(rows, int ncols, field):
    if field.kernel_tables is None:
        return _pykernels.rref(rows, ncols, field)
    add, mul, neg, inv = field.kernel_tables
    nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return [list(r) for r in rows], 0
    W = np.array(rows, dtype=np.int32).reshape(nrows, ncols)
    r = _eliminate(W, nrows, ncols, add, mul, neg, inv, True)
    return W.tolist(), r


def min_pair_injection(bases, int n, field):
    if field.kernel_tables is None:
        return _pykernels.min_pair_injection(bases, n, field)
    cdef Py_ssize_t count = len(bases)
    if count < 2:
        return -1
    cdef int k = len(bases[0])
    if k == 0 or n == 0:
        return -1
    cdef table2d add = field.kernel_tables[0], mul = field.kernel_tables[1]
    cdef table1d neg = field.kernel_tables[2], inv = field.kernel_tables[3]
    cdef const int[:, :, ::1] B = _as3d(bases, k, n)
    cdef int[:, ::1] W = np.empty((2 * k, n), dtype=np.int32)
    cdef int best
    with nogil:
        best = _min_pair_injection(B, W, k, n, add, mul, neg, inv)
    return best


def min_pair_rank_distance(mats, int cols, field):
    if field.kernel_tables is None:
        return _pykernels.min_pair_rank_distance(mats, cols, field)
    cdef Py_ssize_t count = len(mats)
    if count < 2:
        return -1
    cdef int rows = len(mats[0])
    if rows == 0 or cols == 0:
        return -1
    cdef table2d add = field.kernel_tables[0], mul = field.kernel_tables[1]
    cdef table1d neg = field.kernel_tables[2], inv = field.kernel_tables[3]
    cdef const int[:, :, ::1] M = _as3d(mats, rows, cols)
    cdef int[:, ::1] W = np.empty((rows, cols), dtype=np.int32)
    cdef Py_ssize_t a, b, i, j
    cdef int best = -1, d
    with nogil:
        for a in range(count):
            for b in range(a + 1, count):
                for i in range(rows):
                    for j in range(cols):
                        W[i, j] = add[M[a, i, j], neg[M[b, i, j]]]
                d = _eliminate(W, rows, cols, add, mul, neg, inv, False)
                if d > 0 and (best < 0 or d < best):
                    best = d
                    if best == 1:
                        break
            if best == 1:
                break
    return best


def min_nonzero_rank(mats, int cols, field):
    if field.kernel_tables is None:
        return _pykernels.min_nonzero_rank(mats, cols, field)
    cdef Py_ssize_t count = len(mats)
    if count == 0:
        return -1
    cdef int rows = len(mats[0])
    if rows == 0 or cols == 0:
        return -1
    cdef table2d add = field.kernel_tables[0], mul = field.kernel_tables[1]
    cdef table1d neg = field.kernel_tables[2], inv = field.kernel_tables[3]
    cdef const int[:, :, ::1] M = _as3d(mats, rows, cols)
    cdef int[:, ::1] W = np.empty((rows, cols), dtype=np.int32)
    cdef Py_ssize_t a
    cdef int best = -1, d
    with nogil:
        for a in range(count):
            _copy_rows(M[a], W, 0)
            d = _eliminate(W, rows, cols, add, mul, neg, inv, False)
            if d > 0 and (best < 0 or d < best):
                best = d
    return best


def max_cross_intersection(left, right, int n, field):
    if field.kernel_tables is None:
        return _pykernels.max_cross_intersection(left, right, n, field)
    if len(left) == 0 or len(right) == 0:
        return -1
    cdef int ka = len(left[0]), kb = len(right[0])
    if n == 0 or ka == 0 or kb == 0:
        return 0
    cdef table2d add = field.kernel_tables[0], mul = field.kernel_tables[1]
    cdef table1d neg = field.kernel_tables[2], inv = field.kernel_tables[3]
    cdef const int[:, :, ::1] A = _as3d(left, ka, n)
    cdef const int[:, :, ::1] B = _as3d(right, kb, n)
    cdef int[:, ::1] W = np.empty((ka + kb, n), dtype=np.int32)
    cdef Py_ssize_t a, b
    cdef int best = -1, inter
    with nogil:
        for a in range(A.shape[0]):
            for b in range(B.shape[0]):
                _copy_rows(A[a], W, 0)
                _copy_rows(B[b], W, ka)
                inter = ka + kb - _eliminate(W, ka + kb, n, add, mul, neg, inv, False)
                if inter > best:
                    best = inter
    return best
