"""Uniform spanning-tree sampling with Wilson's loop-erased random walk.

Randomness: every sample j owns a SplitMix64 stream whose initial state is
the (j+1)-th output of SplitMix64 seeded with the user seed.  Samples are
therefore independent of evaluation order and of how a range of sample
indices is split between workers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from hanoispan import kernels
from hanoispan.errors import DisconnectedGraphError, LabelError
from hanoispan.graph import HanoiGraph
from hanoispan.oracle import is_connected

ROOT = "0"
MIN_REPORT_SAMPLES = 1000
_MASK = (1 << 64) - 1


def _root_index(graph: HanoiGraph, root: str) -> int:
    if root not in graph:
        raise LabelError(f"root {root!r} not in H_{graph.n}")
    return graph.index(root)


def _require_connected(graph: HanoiGraph) -> None:
    if not is_connected(graph.vertices, graph.edges):
        raise DisconnectedGraphError("sampling needs a connected graph")


def sample_parents(graph: HanoiGraph, seed: int, count: int, start: int = 0, root: str = ROOT) -> np.ndarray:
    """Parent arrays (count x |V|, int32) of trees ``start .. start+count-1``."""
    _require_connected(graph)
    indptr, indices = graph.csr
    return kernels.wilson_parents(indptr, indices, _root_index(graph, root), seed & _MASK, start, count)


def parents_to_edges(graph: HanoiGraph, parents) -> frozenset[tuple[str, str]]:
    verts = graph.vertices
    out = set()
    for child, par in enumerate(parents):
        if par >= 0:
            a, b = verts[child], verts[par]
            out.add((a, b) if a < b else (b, a))
    return frozenset(out)


def sample_tree(graph: HanoiGraph, seed: int, root: str = ROOT) -> frozenset[tuple[str, str]]:
    """One uniformly random spanning tree; identical seeds give identical trees."""
    return parents_to_edges(graph, sample_parents(graph, seed, 1, root=root)[0])


def is_spanning_tree(graph: HanoiGraph, edges) -> bool:
    edges = list(edges)
    if len(edges) != len(graph.vertices) - 1:
        return False
    if any(e not in set(graph.edges) for e in edges):
        return False
    return is_connected(graph.vertices, edges)


@dataclass(frozen=True)
class SampleReport:
    vertex: str
    n: int
    samples: int
    seed: int
    rng: str
    counts: tuple[int, ...]
    exact_prob: tuple[Fraction, ...]

    @property
    def empirical_freq(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.samples) for c in self.counts)

    @property
    def z_score(self) -> tuple[float | None, ...]:
        """(freq - exact) sqrt(N) / sqrt(exact (1 - exact)); None where exact is 0 or 1."""
        out = []
        for c, p in zip(self.counts, self.exact_prob):
            if p in (0, 1):
                out.append(None)
                continue
            freq = Fraction(c, self.samples)
            out.append(float(freq - p) * math.sqrt(self.samples) / math.sqrt(float(p * (1 - p))))
        return tuple(out)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "vertex": self.vertex,
            "samples": self.samples,
            "seed": self.seed,
            "rng": self.rng,
            "backend": kernels.BACKEND,
            "degrees": [
                {
                    "i": i,
                    "count": self.counts[i],
                    "empirical": {"num": str(f.numerator), "den": str(f.denominator)},
                    "exact": {"num": str(p.numerator), "den": str(p.denominator)},
                    "z_score": z,
                }
                for i, (f, p, z) in enumerate(zip(self.empirical_freq, self.exact_prob, self.z_score))
            ],
        }


def degree_counts(graph: HanoiGraph, vertex: str, samples: int, seed: int,
                  start: int = 0, root: str = ROOT) -> np.ndarray:
    """Tally of the tree degree of ``vertex`` over sample indices start..start+samples-1."""
    _require_connected(graph)
    indptr, indices = graph.csr
    tally = kernels.wilson_degree_counts(
        indptr, indices, _root_index(graph, root), graph.index(vertex), seed & _MASK, start, samples
    )
    out = np.zeros(4, dtype=np.int64)
    out[: len(tally)] = tally
    return out


def empirical_degree_report(graph: HanoiGraph, vertex: str, samples: int, seed: int,
                            chunk: int = 100_000) -> SampleReport:
    """Compare sampled degree frequencies at ``vertex`` with the exact law."""
    from hanoispan.degree import degree_distribution

    if vertex not in graph:
        raise LabelError(f"vertex {vertex!r} not in H_{graph.n}")
    if samples < MIN_REPORT_SAMPLES:
        raise ValueError(f"need at least {MIN_REPORT_SAMPLES} samples, got {samples}")
    total = np.zeros(4, dtype=np.int64)
    for start in range(0, samples, chunk):
        total += degree_counts(graph, vertex, min(chunk, samples - start), seed, start)
    return SampleReport(
        vertex=vertex,
        n=graph.n,
        samples=samples,
        seed=seed,
        rng=kernels.RNG_NAME,
        counts=tuple(int(c) for c in total),
        exact_prob=degree_distribution(graph.n, vertex),
    )


def write_degree_csv(graph: HanoiGraph, vertex: str, samples: int, seed: int, fh) -> None:
    """Per-sample degree of ``vertex`` as CSV (sample,degree)."""
    parents = sample_parents(graph, seed, samples)
    v = graph.index(vertex)
    own = 0 if vertex == ROOT else 1
    fh.write("sample,degree\n")
    for j, row in enumerate(parents):
        deg = own + int(np.count_nonzero(row == v))
        fh.write(f"{j},{deg}\n")
