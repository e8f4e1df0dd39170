# cython: boundscheck=False, wraparound=False, cdivision=True
# cython: language_level=3
"""Compiled scoring kernel; see _kernel_py for the reference semantics."""

from libc.math cimport INFINITY
from libc.stdlib cimport free, malloc

cdef double NEG = -INFINITY

BACKEND = "c"


cdef inline double _cell(const double* prev, const int* cell_ref,
                         const double* cell_const, Py_ssize_t k) nogil:
    cdef int ref = cell_ref[k]
    if ref >= 0:
        return prev[ref]
    return cell_const[k]


cdef double _exact_total(const double* prev, const int* cell_ref,
                         const double* cell_const, Py_ssize_t base,
                         int rows, int cols, double* dp0, double* dp1) nogil:
    cdef int nbig, nsmall, bstride, sstride
    cdef Py_ssize_t full, mask, m, low, krow, k
    cdef int bi, si
    cdef double best, cand, val
    cdef double* tmp

    if cols <= rows:
        nbig = rows; nsmall = cols; bstride = cols; sstride = 1
    else:
        nbig = cols; nsmall = rows; bstride = 1; sstride = cols

    if nsmall == 1:
        best = NEG
        for bi in range(nbig):
            val = _cell(prev, cell_ref, cell_const, base + bi * bstride)
            if val > best:
                best = val
        return best

    full = (<Py_ssize_t>1) << nsmall
    dp0[0] = 0.0
    for mask in range(1, full):
        dp0[mask] = NEG
    for bi in range(nbig):
        krow = base + bi * bstride
        for mask in range(full):
            best = dp0[mask]
            m = mask
            while m:
                low = m & (-m)
                si = _bit_index(low)
                m ^= low
                k = krow + si * sstride
                cand = dp0[mask ^ low] + _cell(prev, cell_ref, cell_const, k)
                if cand > best:
                    best = cand
            dp1[mask] = best
        tmp = dp0; dp0 = dp1; dp1 = tmp
    return dp0[full - 1]


cdef inline int _bit_index(Py_ssize_t low) nogil:
    cdef int i = 0
    while low > 1:
        low >>= 1
        i += 1
    return i


cdef double _greedy_total(const double* prev, const int* cell_ref,
                          const double* cell_const, Py_ssize_t base,
                          int rows, int cols,
                          unsigned char* used_r, unsigned char* used_c) nogil:
    cdef int picks = rows if rows < cols else cols
    cdef int t, i, j, bi, bj
    cdef Py_ssize_t krow, k
    cdef double total = 0.0
    cdef double best, val

    for i in range(rows):
        used_r[i] = 0
    for j in range(cols):
        used_c[j] = 0
    for t in range(picks):
        best = -1.0
        bi = -1
        bj = -1
        for i in range(rows):
            if used_r[i]:
                continue
            krow = base + (<Py_ssize_t>i) * cols
            for j in range(cols):
                if used_c[j]:
                    continue
                k = krow + j
                val = _cell(prev, cell_ref, cell_const, k)
                if val > best:
                    best = val
                    bi = i
                    bj = j
        used_r[bi] = 1
        used_c[bj] = 1
        total += best
    return total


def score_pairs(const double[::1] prev, double[::1] out,
                const double[::1] factor, const long long[::1] group_start,
                const double[::1] group_weight, const int[::1] group_rows,
                const int[::1] group_cols, const long long[::1] cell_start,
                const int[::1] cell_ref, const double[::1] cell_const,
                double beta, int exact_limit, Py_ssize_t lo, Py_ssize_t hi):
    cdef Py_ssize_t i, gi, base
    cdef int rows, cols, small
    cdef int max_small = 0
    cdef int max_rows = 1
    cdef int max_cols = 1
    cdef double acc, total
    cdef double one_minus_beta = 1.0 - beta
    cdef double* dp0 = NULL
    cdef double* dp1 = NULL
    cdef unsigned char* used_r = NULL
    cdef unsigned char* used_c = NULL
    cdef Py_ssize_t dp_len

    # Scratch sized for the widest group in this range.
    for i in range(lo, hi):
        for gi in range(group_start[i], group_start[i + 1]):
            rows = group_rows[gi]
            cols = group_cols[gi]
            small = rows if rows < cols else cols
            if small <= exact_limit and small > max_small:
                max_small = small
            if rows > max_rows:
                max_rows = rows
            if cols > max_cols:
                max_cols = cols
    dp_len = (<Py_ssize_t>1) << max_small
    dp0 = <double*>malloc(dp_len * sizeof(double))
    dp1 = <double*>malloc(dp_len * sizeof(double))
    used_r = <unsigned char*>malloc(max_rows)
    used_c = <unsigned char*>malloc(max_cols)
    if dp0 == NULL or dp1 == NULL or used_r == NULL or used_c == NULL:
        free(dp0); free(dp1); free(used_r); free(used_c)
        raise MemoryError()

    try:
        with nogil:
            for i in range(lo, hi):
                acc = 0.0
                for gi in range(group_start[i], group_start[i + 1]):
                    rows = group_rows[gi]
                    cols = group_cols[gi]
                    base = cell_start[gi]
                    small = rows if rows < cols else cols
                    if small <= exact_limit:
                        total = _exact_total(&prev[0], &cell_ref[0],
                                             &cell_const[0], base, rows, cols,
                                             dp0, dp1)
                    else:
                        total = _greedy_total(&prev[0], &cell_ref[0],
                                              &cell_const[0], base, rows, cols,
                                              used_r, used_c)
                    acc += group_weight[gi] * (total / (rows + cols - small))
                out[i] = one_minus_beta * factor[i] * acc + beta
    finally:
        free(dp0)
        free(dp1)
        free(used_r)
        free(used_c)
