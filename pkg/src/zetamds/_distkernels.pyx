# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled pairwise distance kernels.

Hot inner loops of the pipeline: every kernel walks the upper triangle
once (O(N^2 m / 2) work, O(1) temporaries per pair) and writes both
mirror entries, so the result is exactly symmetric with an untouched
zero diagonal. zetamds.metrics picks these up at import when the
extension has been built and falls back to zetamds._kernels_py otherwise.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport acos, fabs, log1p, sqrt

BACKEND_NAME = "compiled"


def pairwise_euclidean(const double[:, ::1] X):
    cdef Py_ssize_t n = X.shape[0], m = X.shape[1]
    out = np.zeros((n, n), dtype=np.float64)
    cdef double[:, ::1] D = out
    cdef Py_ssize_t i, j, k
    cdef double s, d
    with nogil:
        for i in range(n):
            for j in range(i + 1, n):
                s = 0.0
                for k in range(m):
                    d = X[i, k] - X[j, k]
                    s += d * d
                s = sqrt(s)
                D[i, j] = s
                D[j, i] = s
    return out


def pairwise_chebyshev(const double[:, ::1] X):
    cdef Py_ssize_t n = X.shape[0], m = X.shape[1]
    out = np.zeros((n, n), dtype=np.float64)
    cdef double[:, ::1] D = out
    cdef Py_ssize_t i, j, k
    cdef double s, d
    with nogil:
        for i in range(n):
            for j in range(i + 1, n):
                s = 0.0
                for k in range(m):
                    d = fabs(X[i, k] - X[j, k])
                    if d > s:
                        s = d
                D[i, j] = s
                D[j, i] = s
    return out


def pairwise_chebyshev_literal(const double[:, ::1] X):
    # max_k(|a_k| - b_k) as printed: asymmetric, so the full square is walked.
    cdef Py_ssize_t n = X.shape[0], m = X.shape[1]
    out = np.zeros((n, n), dtype=np.float64)
    cdef double[:, ::1] D = out
    cdef Py_ssize_t i, j, k
    cdef double s, d
    with nogil:
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                s = fabs(X[i, 0]) - X[j, 0]
                for k in range(1, m):
                    d = fabs(X[i, k]) - X[j, k]
                    if d > s:
                        s = d
                D[i, j] = s
        for i in range(n):
            s = fabs(X[i, 0]) - X[i, 0]
            for k in range(1, m):
                d = fabs(X[i, k]) - X[i, k]
                if d > s:
                    s = d
            D[i, i] = s
    return out


def pairwise_canberra(const double[:, ::1] X):
    cdef Py_ssize_t n = X.shape[0], m = X.shape[1]
    out = np.zeros((n, n), dtype=np.float64)
    cdef double[:, ::1] D = out
    cdef Py_ssize_t i, j, k
    cdef double s, num, den
    with nogil:
        for i in range(n):
            for j in range(i + 1, n):
                s = 0.0
                for k in range(m):
                    num = fabs(X[i, k] - X[j, k])
                    den = fabs(X[i, k]) + fabs(X[j, k])
                    if den > 0.0:
                        s += num / den
                D[i, j] = s
                D[j, i] = s
    return out


def pairwise_lorentzian(const double[:, ::1] X):
    cdef Py_ssize_t n = X.shape[0], m = X.shape[1]
    out = np.zeros((n, n), dtype=np.float64)
    cdef double[:, ::1] D = out
    cdef Py_ssize_t i, j, k
    cdef double s
    with nogil:
        for i in range(n):
            for j in range(i + 1, n):
                s = 0.0
                for k in range(m):
                    s += log1p(fabs(X[i, k] - X[j, k]))
                D[i, j] = s
                D[j, i] = s
    return out


def pairwise_arccosine(const double[:, ::1] X):
    cdef Py_ssize_t n = X.shape[0], m = X.shape[1]
    out = np.zeros((n, n), dtype=np.float64)
    norms_arr = np.empty(n, dtype=np.float64)
    cdef double[:, ::1] D = out
    cdef double[::1] norms = norms_arr
    cdef Py_ssize_t i, j, k
    cdef double s, c
    with nogil:
        for i in range(n):
            s = 0.0
            for k in range(m):
                s += X[i, k] * X[i, k]
            norms[i] = sqrt(s)
        for i in range(n):
            for j in range(i + 1, n):
                s = 0.0
                for k in range(m):
                    s += X[i, k] * X[j, k]
                c = s / (norms[i] * norms[j])
                if c > 1.0:
                    c = 1.0
                elif c < -1.0:
                    c = -1.0
                c = acos(c)
                D[i, j] = c
                D[j, i] = c
    return out


def pairwise_jaccard(const double[:, ::1] X):
    cdef Py_ssize_t n = X.shape[0], m = X.shape[1]
    out = np.zeros((n, n), dtype=np.float64)
    sq_arr = np.empty(n, dtype=np.float64)
    cdef double[:, ::1] D = out
    cdef double[::1] sq = sq_arr
    cdef Py_ssize_t i, j, k
    cdef double s, den, sim
    with nogil:
        for i in range(n):
            s = 0.0
            for k in range(m):
                s += X[i, k] * X[i, k]
            sq[i] = s
        for i in range(n):
            for j in range(i + 1, n):
                s = 0.0
                for k in range(m):
                    s += X[i, k] * X[j, k]
                den = sq[i] + sq[j] - s
                if den == 0.0:
                    sim = 1.0  # both rows zero: identical vectors
                else:
                    sim = s / den
                s = 1.0 - sim
                D[i, j] = s
                D[j, i] = s
    return out


def pairwise_jaccard_literal(const double[:, ::1] X):
    # Tanimoto similarity as printed: the diagonal is T(x, x) = 1, not 0.
    cdef Py_ssize_t n = X.shape[0], m = X.shape[1]
    out = np.zeros((n, n), dtype=np.float64)
    sq_arr = np.empty(n, dtype=np.float64)
    cdef double[:, ::1] D = out
    cdef double[::1] sq = sq_arr
    cdef Py_ssize_t i, j, k
    cdef double s, den, sim
    with nogil:
        for i in range(n):
            s = 0.0
            for k in range(m):
                s += X[i, k] * X[i, k]
            sq[i] = s
        for i in range(n):
            D[i, i] = 1.0
            for j in range(i + 1, n):
                s = 0.0
                for k in range(m):
                    s += X[i, k] * X[j, k]
                den = sq[i] + sq[j] - s
                if den == 0.0:
                    sim = 1.0
                else:
                    sim = s / den
                D[i, j] = sim
                D[j, i] = sim
    return out
