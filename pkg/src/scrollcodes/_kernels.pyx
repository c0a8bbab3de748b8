# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels over table-encoded finite fields.

Every array holds element codes (see ``gf.FieldTables``).  Signatures and
results match ``_pykernels`` exactly; the test-suite checks that.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t

cnp.import_array()


def matmul(const int64_t[:, ::1] A, const int64_t[:, ::1] B,
           const int64_t[:, ::1] add, const int64_t[:, ::1] mul):
    cdef Py_ssize_t rows = A.shape[0], inner = A.shape[1], cols = B.shape[1]
    cdef Py_ssize_t i, j, t
    cdef int64_t a
    if B.shape[0] != inner:
        raise ValueError("inner dimensions differ")
    out = np.zeros((rows, cols), dtype=np.int64)
    cdef int64_t[:, ::1] C = out
    with nogil:
        for i in range(rows):
            for t in range(inner):
                a = A[i, t]
                if a == 0:
                    continue
                for j in range(cols):
                    C[i, j] = add[C[i, j], mul[a, B[t, j]]]
    return out


cdef Py_ssize_t _rref(int64_t[:, ::1] M, Py_ssize_t nrows,
                      const int64_t[:, ::1] add, const int64_t[:, ::1] mul,
                      const int64_t[::1] neg, const int64_t[::1] inv,
                      Py_ssize_t* pivots) noexcept nogil:
    cdef Py_ssize_t cols = M.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef int64_t tmp, scale, f
    for c in range(cols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if M[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(cols):
                tmp = M[r, j]
                M[r, j] = M[piv, j]
                M[piv, j] = tmp
        scale = inv[M[r, c]]
        if scale != 1:
            for j in range(c, cols):
                M[r, j] = mul[scale, M[r, j]]
        for i in range(nrows):
            if i != r and M[i, c] != 0:
                f = neg[M[i, c]]
                for j in range(c, cols):
                    M[i, j] = add[M[i, j], mul[f, M[r, j]]]
        pivots[r] = c
        r += 1
    return r


def rref(int64_t[:, ::1] M, const int64_t[:, ::1] add, const int64_t[:, ::1] mul,
         const int64_t[::1] neg, const int64_t[::1] inv):
    """Reduce ``M`` in place; return the list of pivot columns."""
    cdef Py_ssize_t n = min(M.shape[0], M.shape[1])
    piv = np.zeros(max(n, 1), dtype=np.intp)
    cdef Py_ssize_t[::1] pv = piv
    cdef Py_ssize_t rank
    with nogil:
        rank = _rref(M, M.shape[0], add, mul, neg, inv, &pv[0])
    return [int(c) for c in piv[:rank]]


def rank(const int64_t[:, ::1] M, const int64_t[:, ::1] add, const int64_t[:, ::1] mul,
         const int64_t[::1] neg, const int64_t[::1] inv):
    work = np.array(M, dtype=np.int64, copy=True, order="C")
    return len(rref(work, add, mul, neg, inv))


def min_weight(const int64_t[:, ::1] G, const int64_t[:, ::1] add,
               const int64_t[:, ::1] mul, const int64_t[::1] neg):
    """Minimum Hamming weight of a nonzero vector in the row space of G (0 if none).

    Only messages whose first nonzero coordinate is 1 are visited; the other
    coordinates run through an odometer that updates the codeword in place.
    """
    cdef Py_ssize_t k = G.shape[0], n = G.shape[1], q = add.shape[0]
    cdef Py_ssize_t i, j, c, L, pos, w
    cdef Py_ssize_t best = n + 1
    if k == 0 or n == 0:
        return 0
    mult_arr = np.empty((k, q, n), dtype=np.int64)
    diff_arr = np.empty((k, q, n), dtype=np.int64)
    cdef int64_t[:, :, ::1] mult = mult_arr
    cdef int64_t[:, :, ::1] diff = diff_arr
    cw_arr = np.empty(n, dtype=np.int64)
    dig_arr = np.zeros(k, dtype=np.intp)
    cdef int64_t[::1] cw = cw_arr
    cdef Py_ssize_t[::1] digits = dig_arr
    with nogil:
        for i in range(k):
            for c in range(q):
                for j in range(n):
                    mult[i, c, j] = mul[c, G[i, j]]
            for c in range(q):
                for j in range(n):
                    if c + 1 < q:
                        diff[i, c, j] = add[mult[i, c + 1, j], neg[mult[i, c, j]]]
                    else:
                        diff[i, c, j] = neg[mult[i, c, j]]
        for L in range(k):
            for j in range(n):
                cw[j] = G[L, j]
            for i in range(k):
                digits[i] = 0
            while True:
                w = 0
                for j in range(n):
                    if cw[j] != 0:
                        w += 1
                if 0 < w < best:
                    best = w
                pos = L + 1
                while pos < k:
                    c = digits[pos]
                    for j in range(n):
                        cw[j] = add[cw[j], diff[pos, c, j]]
                    if c == q - 1:
                        digits[pos] = 0
                        pos += 1
                    else:
                        digits[pos] = c + 1
                        break
                if pos >= k:
                    break
    return 0 if best > n else best


def span_search(const int64_t[:, ::1] blocks, const int64_t[::1] syn, Py_ssize_t r,
                Py_ssize_t a_max, const int64_t[:, ::1] add, const int64_t[:, ::1] mul,
                const int64_t[::1] neg, const int64_t[::1] inv):
    """Smallest fiber sets whose block rows span ``syn``.

    ``blocks`` has s*r rows; rows r*i .. r*i+r-1 belong to fiber i.  Returns
    ``(hits, tests)`` where hits are the a-subsets (sorted tuples) at the
    first a with any hit, and tests counts span-membership checks.
    """
    cdef Py_ssize_t nk = blocks.shape[1]
    cdef Py_ssize_t s = blocks.shape[0] // r
    cdef Py_ssize_t a, i, j, t, rk, p, c, rows
    cdef Py_ssize_t tests = 0
    cdef bint zero = True, hit
    cdef int64_t f
    for j in range(nk):
        if syn[j] != 0:
            zero = False
            break
    if zero:
        return [()], 0
    if a_max > s:
        a_max = s
    if a_max < 1:
        return [], 0
    work_arr = np.zeros((a_max * r + 1, nk), dtype=np.int64)
    cdef int64_t[:, ::1] work = work_arr
    piv_arr = np.zeros(a_max * r + 1, dtype=np.intp)
    cdef Py_ssize_t[::1] piv = piv_arr
    combo_arr = np.zeros(a_max, dtype=np.intp)
    cdef Py_ssize_t[::1] combo = combo_arr
    hits = []
    for a in range(1, a_max + 1):
        rows = a * r
        for i in range(a):
            combo[i] = i
        while True:
            with nogil:
                for i in range(a):
                    for t in range(r):
                        for j in range(nk):
                            work[i * r + t, j] = blocks[combo[i] * r + t, j]
                rk = _rref(work, rows, add, mul, neg, inv, &piv[0])
                for j in range(nk):
                    work[rows, j] = syn[j]
                for p in range(rk):
                    c = piv[p]
                    f = work[rows, c]
                    if f != 0:
                        f = neg[f]
                        for j in range(nk):
                            work[rows, j] = add[work[rows, j], mul[f, work[p, j]]]
                hit = True
                for j in range(nk):
                    if work[rows, j] != 0:
                        hit = False
                        break
            tests += 1
            if hit:
                hits.append(tuple(int(combo[i]) for i in range(a)))
            # next a-combination of range(s) in lexicographic order
            i = a - 1
            while i >= 0 and combo[i] == s - a + i:
                i -= 1
            if i < 0:
                break
            combo[i] += 1
            for t in range(i + 1, a):
                combo[t] = combo[t - 1] + 1
        if hits:
            return hits, tests
    return [], tests
