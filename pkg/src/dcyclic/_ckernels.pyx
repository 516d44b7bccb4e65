# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops: Gauss-Jordan elimination and exhaustive weight search over F_p."""
import numpy as np
cimport numpy as cnp

ctypedef cnp.int64_t i64


cdef inline i64 _inv(i64 a, i64 p) nogil:
    cdef i64 r0 = p, r1 = a % p, s0 = 0, s1 = 1, q, t
    while r1:
        q = r0 // r1
        t = r0 - q * r1
        r0 = r1
        r1 = t
        t = s0 - q * s1
        s0 = s1
        s1 = t
    s0 %= p
    if s0 < 0:
        s0 += p
    return s0


def rref(a_in, long p):
    """Reduced row echelon form mod p. Returns (matrix, pivot columns)."""
    cdef cnp.ndarray[i64, ndim=2] arr = np.ascontiguousarray(a_in, dtype=np.int64) % p
    cdef i64[:, ::1] a = arr
    cdef Py_ssize_t rows = a.shape[0], cols = a.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef i64 f, inv, tmp
    pivots = []
    for c in range(cols):
        if r >= rows:
            break
        piv = -1
        for i in range(r, rows):
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(cols):
                tmp = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = tmp
        inv = _inv(a[r, c], p)
        if inv != 1:
            for j in range(c, cols):
                a[r, j] = a[r, j] * inv % p
        for i in range(rows):
            if i != r:
                f = a[i, c]
                if f:
                    for j in range(c, cols):
                        a[i, j] = (a[i, j] - f * a[r, j]) % p
                        if a[i, j] < 0:
                            a[i, j] += p
        pivots.append(c)
        r += 1
    return arr, pivots


def min_weight(g_in, long p):
    """Minimum Hamming weight over nonzero vectors of the row space; -1 if none.

    Walks one representative per projective point: the first nonzero message
    digit is fixed to 1, the rest run through an odometer.
    """
    cdef cnp.ndarray[i64, ndim=2] garr = np.ascontiguousarray(g_in, dtype=np.int64) % p
    cdef i64[:, ::1] g = garr
    cdef Py_ssize_t k = g.shape[0], n = g.shape[1]
    cdef cnp.ndarray[i64, ndim=1] warr = np.zeros(n, dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=1] darr = np.zeros(max(k, 1), dtype=np.int64)
    cdef i64[::1] w = warr
    cdef i64[::1] digits = darr
    cdef Py_ssize_t t, j, col, wt
    cdef long best = -1
    cdef bint done
    for t in range(k):
        for col in range(n):
            w[col] = g[t, col]
        for j in range(k):
            digits[j] = 0
        while True:
            wt = 0
            for col in range(n):
                if w[col]:
                    wt += 1
            if wt and (best < 0 or wt < best):
                best = wt
            # odometer over rows t+1 .. k-1
            done = True
            for j in range(t + 1, k):
                for col in range(n):
                    w[col] += g[j, col]
                    if w[col] >= p:
                        w[col] -= p
                digits[j] += 1
                if digits[j] < p:
                    done = False
                    break
                digits[j] = 0
            if done:
                break
    return best


def span_all(g_in, long p):
    """Every vector of the row space (with multiplicity if rows are dependent).

    Row r of the output is the combination whose base-p digits (least
    significant first) are the coefficients of the generator rows.
    """
    cdef cnp.ndarray[i64, ndim=2] garr = np.ascontiguousarray(g_in, dtype=np.int64) % p
    cdef i64[:, ::1] g = garr
    cdef Py_ssize_t k = g.shape[0], n = g.shape[1]
    cdef Py_ssize_t total = 1
    cdef Py_ssize_t idx, j, col
    for j in range(k):
        total *= p
    cdef cnp.ndarray[i64, ndim=2] out = np.zeros((total, n), dtype=np.int64)
    cdef i64[:, ::1] o = out
    cdef cnp.ndarray[i64, ndim=1] warr = np.zeros(n, dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=1] darr = np.zeros(max(k, 1), dtype=np.int64)
    cdef i64[::1] w = warr
    cdef i64[::1] digits = darr
    for idx in range(total):
        for col in range(n):
            o[idx, col] = w[col]
        for j in range(k):
            for col in range(n):
                w[col] += g[j, col]
                if w[col] >= p:
                    w[col] -= p
            digits[j] += 1
            if digits[j] < p:
                break
            digits[j] = 0
    return out
