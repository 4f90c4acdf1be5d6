"""Brute-force verification routes on explicit graphs.

Nothing here uses the Hanoi self-similarity: counts come from Laplacian
minors (matrix-tree theorem), exhaustive enumeration, and interpolation of
vertex-weighted determinants.  Any graph given as an edge list is accepted.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from hanoispan import kernels
from hanoispan.errors import DisconnectedGraphError, EnumerationLimitError, LabelError, OracleError
from hanoispan.graph import HanoiGraph

log = logging.getLogger(__name__)

Edge = tuple[str, str]


def _normalize(graph) -> tuple[list, list[tuple]]:
    """Return (sorted vertices, sorted canonical edges) for any accepted input."""
    if isinstance(graph, HanoiGraph):
        return list(graph.vertices), list(graph.edges)
    if (
        isinstance(graph, tuple)
        and len(graph) == 2
        and not isinstance(graph[0], str)
        and not any(isinstance(x, (tuple, list)) for x in graph[0])
        and all(isinstance(e, (tuple, list)) and len(e) == 2 for e in graph[1])
    ):
        verts, edges = graph
        verts = sorted(set(verts))
    else:
        edges, verts = graph, None
    canon = sorted({(a, b) if a <= b else (b, a) for a, b in edges})
    if any(a == b for a, b in canon):
        raise ValueError("self-loops are not supported")
    if verts is None:
        verts = sorted({x for e in canon for x in e})
    return verts, canon


def is_connected(vertices: Sequence, edges: Iterable) -> bool:
    if not vertices:
        return False
    nbrs = {v: [] for v in vertices}
    for a, b in edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    seen = {vertices[0]}
    todo = deque([vertices[0]])
    while todo:
        for u in nbrs[todo.popleft()]:
            if u not in seen:
                seen.add(u)
                todo.append(u)
    return len(seen) == len(vertices)


def laplacian(vertices: Sequence, edges: Iterable, weights: dict | None = None) -> list[list[int]]:
    """Integer (optionally edge-weighted) graph Laplacian in vertex order."""
    idx = {v: i for i, v in enumerate(vertices)}
    n = len(vertices)
    L = [[0] * n for _ in range(n)]
    for e in edges:
        w = 1 if weights is None else weights.get(e, 1)
        i, j = idx[e[0]], idx[e[1]]
        L[i][i] += w
        L[j][j] += w
        L[i][j] -= w
        L[j][i] -= w
    return L


def minor(L: list[list[int]], removed: Iterable[int]) -> list[list[int]]:
    drop = set(removed)
    keep = [i for i in range(len(L)) if i not in drop]
    return [[L[i][j] for j in keep] for i in keep]


def determinant(rows: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    return kernels.bareiss_det(rows)


def matrix_tree_count(graph, drop: int = 0) -> int:
    """Number of spanning trees as the determinant of a Laplacian minor.

    ``drop`` selects the deleted row/column; the result is independent of
    it.  A disconnected graph yields 0 and a logged warning.
    """
    verts, edges = _normalize(graph)
    if len(verts) < 2:
        raise ValueError("need at least 2 vertices")
    if not is_connected(verts, edges):
        log.warning("graph is disconnected; spanning-tree count is 0")
        return 0
    return determinant(minor(laplacian(verts, edges), [drop]))


def enumerate_trees(graph, max_trees: int = 1_000_000) -> Iterator[frozenset[Edge]]:
    """Yield every spanning tree once, as a frozenset of canonical edges.

    Edges are decided in sorted order.  An edge is taken when it joins two
    components of the partial forest (contraction) and skipped only when
    the remaining undecided edges still reconnect its endpoints, i.e. it is
    not a bridge of the current graph (deletion).
    """
    verts, edges = _normalize(graph)
    total = matrix_tree_count((verts, edges))
    if total > max_trees:
        raise EnumerationLimitError(f"{total} spanning trees exceed the limit {max_trees}")
    idx = {v: i for i, v in enumerate(verts)}
    pairs = [(idx[a], idx[b]) for a, b in edges]
    nv, ne = len(verts), len(edges)
    need = nv - 1

    def find(parent, x):
        while parent[x] != x:
            x = parent[x]
        return x

    def reconnects(parent, k, u, v):
        # BFS over component roots using edges k+1.. only
        ru, rv = find(parent, u), find(parent, v)
        adj: dict[int, list[int]] = {}
        for a, b in pairs[k + 1:]:
            ra, rb = find(parent, a), find(parent, b)
            if ra != rb:
                adj.setdefault(ra, []).append(rb)
                adj.setdefault(rb, []).append(ra)
        seen = {ru}
        todo = [ru]
        while todo:
            x = todo.pop()
            if x == rv:
                return True
            for y in adj.get(x, ()):
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        return False

    chosen: list[int] = []

    def rec(k, parent):
        if len(chosen) == need:
            yield frozenset(edges[j] for j in chosen)
            return
        if k == ne or ne - k < need - len(chosen):
            return
        u, v = pairs[k]
        ru, rv = find(parent, u), find(parent, v)
        if ru != rv:
            merged = list(parent)
            merged[ru] = rv
            chosen.append(k)
            yield from rec(k + 1, merged)
            chosen.pop()
            if reconnects(parent, k, u, v):
                yield from rec(k + 1, parent)
        else:
            yield from rec(k + 1, parent)

    if nv == 1:
        yield frozenset()
        return
    yield from rec(0, list(range(nv)))


@dataclass(frozen=True)
class DegreePolynomial:
    vertex: str
    coeffs: tuple[int, int, int, int]

    def to_json(self) -> dict:
        return {"vertex": self.vertex, "coeffs": [str(c) for c in self.coeffs]}


def _interpolate(values: Sequence[int]) -> list[int]:
    """Coefficients of the polynomial through (x, values[x]) for x = 0..k."""
    pts = range(len(values))
    coeffs = [Fraction(0)] * len(values)
    for k in pts:
        basis = [Fraction(1)]
        denom = 1
        for m in pts:
            if m == k:
                continue
            basis = [(basis[i - 1] if i else 0) - m * (basis[i] if i < len(basis) else 0)
                     for i in range(len(basis) + 1)]
            denom *= k - m
        for i, b in enumerate(basis):
            coeffs[i] += values[k] * b / denom
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise OracleError(f"non-integer interpolated coefficient {c}")
        out.append(c.numerator)
    return out


def _weighted_poly(verts, edges, vertex, removed_sets):
    """Per removed set, coefficients of det(weighted minor) in the weight x of
    the edges incident to ``vertex``."""
    incident = [e for e in edges if vertex in e]
    d = len(incident)
    if d > 3:
        raise ValueError(f"vertex {vertex!r} has degree {d} > 3")
    idx = {v: i for i, v in enumerate(verts)}
    samples = [[] for _ in removed_sets]
    for x in range(d + 1):
        L = laplacian(verts, edges, {e: x for e in incident})
        for out, rem in zip(samples, removed_sets):
            out.append(determinant(minor(L, [idx[r] for r in rem])))
    polys = []
    for vals in samples:
        c = _interpolate(vals)
        polys.append(tuple(c + [0] * (4 - len(c))))
    return polys


def degree_poly(graph, vertex: str) -> DegreePolynomial:
    """Number of spanning trees in which ``vertex`` has degree i, i = 0..3.

    Evaluates the matrix-tree determinant with the vertex's edges weighted
    by x = 0..deg and interpolates exactly.
    """
    verts, edges = _normalize(graph)
    if vertex not in verts:
        raise LabelError(f"vertex {vertex!r} not in graph")
    if not is_connected(verts, edges):
        raise DisconnectedGraphError("degree_poly needs a connected graph")
    (coeffs,) = _weighted_poly(verts, edges, vertex, [[verts[0]]])
    return DegreePolynomial(vertex, coeffs)


def class_degree_counts(graph, vertex: str, outmost: Sequence[str] = ("0", "1", "2")) -> dict[str, tuple]:
    """Degree counts of ``vertex`` in all five spanning-subgraph classes.

    Uses forest counts from principal minors: removing {a, b} counts
    two-tree forests separating a and b, removing all three counts the
    three-tree class, and the classes isolating one outmost vertex follow
    by inclusion-exclusion.
    """
    verts, edges = _normalize(graph)
    if vertex not in verts:
        raise LabelError(f"vertex {vertex!r} not in graph")
    o0, o1, o2 = outmost
    S, F01, F02, F12, L = _weighted_poly(
        verts, edges, vertex, [[o0], [o0, o1], [o0, o2], [o1, o2], [o0, o1, o2]]
    )

    def half(a, b, c):
        vals = []
        for x, y, z in zip(a, b, c):
            q, r = divmod(x + y - z, 2)
            if r:
                raise OracleError("odd forest inclusion-exclusion")
            vals.append(q)
        return tuple(vals)

    return {
        "S": S,
        "P": half(F02, F12, F01),  # {0,1} | {2}
        "T": half(F01, F12, F02),  # {0,2} | {1}
        "R": half(F01, F02, F12),  # {0} | {1,2}
        "L": L,
    }


def class_counts(graph, outmost: Sequence[str] = ("0", "1", "2")) -> dict[str, int]:
    """Sizes of the five spanning-subgraph classes from principal Laplacian minors."""
    verts, edges = _normalize(graph)
    idx = {v: i for i, v in enumerate(verts)}
    o0, o1, o2 = (idx[o] for o in outmost)
    L = laplacian(verts, edges)

    def det(rem):
        return determinant(minor(L, rem))

    s, f01, f02, f12, l = det([o0]), det([o0, o1]), det([o0, o2]), det([o1, o2]), det([o0, o1, o2])
    return {
        "s": s,
        "p": (f02 + f12 - f01) // 2,
        "t": (f01 + f12 - f02) // 2,
        "r": (f01 + f02 - f12) // 2,
        "l": l,
    }
