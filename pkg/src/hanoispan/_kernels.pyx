# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: Bareiss determinant and Wilson's sampler.

Same algorithms and RNG stream layout as ``hanoispan._fallback``.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t, int32_t, int64_t
from libc.stdlib cimport malloc, free

cnp.import_array()

cdef uint64_t GAMMA = 0x9E3779B97F4A7C15ULL


cdef inline uint64_t mix64(uint64_t z) noexcept nogil:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL
    return z ^ (z >> 31)


cdef inline uint64_t stream_state(uint64_t seed, uint64_t j) noexcept nogil:
    return mix64(seed + (j + 1) * GAMMA)


def bareiss_det(rows):
    """Fraction-free (Bareiss) determinant of a square integer matrix."""
    cdef list m = [list(row) for row in rows]
    cdef Py_ssize_t n = len(m), k, i, j, r
    cdef int sign = 1
    cdef list row_i, row_k
    cdef object prev = 1, pivot, f
    if n == 0:
        return 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        row_k = m[k]
        pivot = row_k[k]
        for i in range(k + 1, n):
            row_i = m[i]
            f = row_i[k]
            if f == 0:
                if prev == 1:
                    for j in range(k + 1, n):
                        row_i[j] = row_i[j] * pivot
                else:
                    for j in range(k + 1, n):
                        row_i[j] = (row_i[j] * pivot) // prev
            else:
                for j in range(k + 1, n):
                    row_i[j] = (row_i[j] * pivot - f * row_k[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


cdef uint64_t _wilson(const int32_t* indptr, const int32_t* indices, int nv, int root,
                      uint64_t state, char* in_tree, int32_t* nxt) noexcept nogil:
    cdef int v, u, start, lo, d
    cdef uint64_t r, threshold
    for v in range(nv):
        in_tree[v] = 0
        nxt[v] = -1
    in_tree[root] = 1
    for start in range(nv):
        u = start
        while not in_tree[u]:
            lo = indptr[u]
            d = indptr[u + 1] - lo
            threshold = (<uint64_t>0 - <uint64_t>d) % <uint64_t>d
            while True:
                state = state + GAMMA
                r = mix64(state)
                if r >= threshold:
                    break
            nxt[u] = indices[lo + <int>(r % <uint64_t>d)]
            u = nxt[u]
        u = start
        while not in_tree[u]:
            in_tree[u] = 1
            u = nxt[u]
    return state


def wilson_parents(cnp.int32_t[::1] indptr, cnp.int32_t[::1] indices, int root,
                   uint64_t seed, int64_t start, int64_t count):
    """Parent arrays of ``count`` uniform spanning trees (root's parent is -1)."""
    cdef int nv = indptr.shape[0] - 1
    cdef cnp.ndarray[cnp.int32_t, ndim=2] out = np.empty((count, nv), dtype=np.int32)
    cdef cnp.int32_t[:, ::1] ov = out
    cdef char* in_tree = <char*>malloc(nv)
    cdef int64_t j
    if in_tree == NULL:
        raise MemoryError()
    try:
        with nogil:
            for j in range(count):
                _wilson(&indptr[0], &indices[0], nv, root,
                        stream_state(seed, <uint64_t>(start + j)), in_tree, &ov[j, 0])
    finally:
        free(in_tree)
    return out


def wilson_degree_counts(cnp.int32_t[::1] indptr, cnp.int32_t[::1] indices, int root,
                         int vertex, uint64_t seed, int64_t start, int64_t count):
    """Tally the tree degree of ``vertex`` over ``count`` sampled trees."""
    cdef int nv = indptr.shape[0] - 1
    cdef int i, maxdeg = 0, deg, own = 0 if vertex == root else 1
    for i in range(nv):
        if indptr[i + 1] - indptr[i] > maxdeg:
            maxdeg = indptr[i + 1] - indptr[i]
    tally_arr = np.zeros(maxdeg + 1, dtype=np.int64)
    cdef cnp.int64_t[::1] tally = tally_arr
    cdef char* in_tree = <char*>malloc(nv)
    cdef int32_t* nxt = <int32_t*>malloc(nv * sizeof(int32_t))
    cdef int64_t j
    if in_tree == NULL or nxt == NULL:
        free(in_tree)
        free(nxt)
        raise MemoryError()
    try:
        with nogil:
            for j in range(count):
                _wilson(&indptr[0], &indices[0], nv, root,
                        stream_state(seed, <uint64_t>(start + j)), in_tree, nxt)
                deg = own
                for i in range(indptr[vertex], indptr[vertex + 1]):
                    if nxt[indices[i]] == vertex:
                        deg += 1
                tally[deg] += 1
    finally:
        free(in_tree)
        free(nxt)
    return tally_arr
