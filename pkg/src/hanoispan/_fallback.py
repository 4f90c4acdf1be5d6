"""Pure-Python implementations of the hot kernels.

Bit-for-bit equivalent to the compiled ``_kernels`` extension; used when the
extension is not built or ``HANOISPAN_PURE_PYTHON=1`` is set.
"""

import numpy as np

MASK = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15


def mix64(z):
    z &= MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return z ^ (z >> 31)


def stream_state(seed, j):
    """Initial SplitMix64 state of sample j: the (j+1)-th output of SplitMix64(seed)."""
    return mix64((seed + (j + 1) * GAMMA) & MASK)


def bareiss_det(rows):
    """Fraction-free (Bareiss) determinant of a square integer matrix."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            f = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - f * row_k[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def _wilson(indptr, indices, root, state, in_tree, nxt):
    nv = len(indptr) - 1
    for v in range(nv):
        in_tree[v] = False
        nxt[v] = -1
    in_tree[root] = True
    for start in range(nv):
        u = start
        while not in_tree[u]:
            lo = indptr[u]
            d = indptr[u + 1] - lo
            threshold = ((1 << 64) - d) % d
            while True:
                state = (state + GAMMA) & MASK
                r = mix64(state)
                if r >= threshold:
                    break
            nxt[u] = indices[lo + r % d]
            u = nxt[u]
        u = start
        while not in_tree[u]:
            in_tree[u] = True
            u = nxt[u]
    return state


def wilson_parents(indptr, indices, root, seed, start, count):
    """Parent arrays of ``count`` uniform spanning trees (root's parent is -1)."""
    ip = [int(x) for x in indptr]
    ix = [int(x) for x in indices]
    nv = len(ip) - 1
    out = np.empty((count, nv), dtype=np.int32)
    in_tree = [False] * nv
    nxt = [-1] * nv
    for j in range(count):
        _wilson(ip, ix, root, stream_state(seed, start + j), in_tree, nxt)
        out[j] = nxt
    return out


def wilson_degree_counts(indptr, indices, root, vertex, seed, start, count):
    """Tally the tree degree of ``vertex`` over ``count`` sampled trees."""
    ip = [int(x) for x in indptr]
    ix = [int(x) for x in indices]
    nv = len(ip) - 1
    maxdeg = max(ip[i + 1] - ip[i] for i in range(nv))
    tally = np.zeros(maxdeg + 1, dtype=np.int64)
    in_tree = [False] * nv
    nxt = [-1] * nv
    own = 0 if vertex == root else 1
    for j in range(count):
        _wilson(ip, ix, root, stream_state(seed, start + j), in_tree, nxt)
        deg = own
        for u in ix[ip[vertex]:ip[vertex + 1]]:
            if nxt[u] == vertex:
                deg += 1
        tally[deg] += 1
    return tally
