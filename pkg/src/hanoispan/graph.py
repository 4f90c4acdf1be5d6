"""Explicit construction of the Tower-of-Hanoi graph H_n.

Vertices are named by compressed labels: the level-n disc configuration
with any trailing run of identical digits collapsed to one digit.  The
three outmost (corner) vertices are "0", "1", "2"; the six vertices that
carry the inter-copy edges are the two-digit labels.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

import numpy as np

from hanoispan.errors import FormatError, GraphSizeError, LabelError

PEGS = "012"
DEFAULT_MAX_N = 12
MAX_N_ENV = "HANOISPAN_MAX_N"

# cross edges joining the three copies of H_{n-1}
CROSS_EDGES = (("01", "10"), ("02", "20"), ("12", "21"))


def max_explicit_n() -> int:
    """Size cap for explicit graphs; overridable through ``HANOISPAN_MAX_N``."""
    raw = os.environ.get(MAX_N_ENV)
    if raw is None:
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise GraphSizeError(f"{MAX_N_ENV}={raw!r} is not an integer") from None
    if value < 1:
        raise GraphSizeError(f"{MAX_N_ENV} must be >= 1, got {value}")
    return value


def compress_label(raw: str | Iterable[int | str]) -> str:
    """Collapse the trailing run of identical digits to a single digit.

    >>> compress_label("0100")
    '010'
    >>> compress_label("000")
    '0'
    """
    text = raw if isinstance(raw, str) else "".join(str(d) for d in raw)
    if not text:
        raise LabelError("empty label")
    bad = set(text) - set(PEGS)
    if bad:
        raise LabelError(f"label {text!r} contains digits outside {{0,1,2}}: {sorted(bad)}")
    end = len(text)
    while end > 1 and text[end - 1] == text[end - 2]:
        end -= 1
    return text[:end]


def is_compressed(label: str) -> bool:
    return (
        bool(label)
        and set(label) <= set(PEGS)
        and (len(label) == 1 or label[-1] != label[-2])
    )


def check_label(label: str, n: int) -> str:
    """Validate that ``label`` names a vertex of H_n and return it."""
    if not isinstance(label, str) or not is_compressed(label):
        raise LabelError(f"{label!r} is not a compressed vertex label")
    if len(label) > n:
        raise LabelError(f"label {label!r} is longer than the level n={n}")
    return label


def permute_label(label: str, sigma: str) -> str:
    """Apply a peg permutation digit-wise; ``sigma[d]`` is the image of peg d."""
    return label.translate(str.maketrans(PEGS, sigma))


@dataclass(frozen=True)
class VertexClass:
    kind: str  # "outmost" | "connecting" | "interior"
    pegs: tuple[int, ...] = ()

    def __str__(self) -> str:
        if self.kind == "outmost":
            return f"Outmost({self.pegs[0]})"
        if self.kind == "connecting":
            return f"Connecting({self.pegs[0]}<->{self.pegs[1]})"
        return "Interior"


def classify_vertex(label: str) -> VertexClass:
    """Classify a vertex from the length of its compressed label."""
    if not is_compressed(label):
        raise LabelError(f"{label!r} is not a compressed vertex label")
    if len(label) == 1:
        return VertexClass("outmost", (int(label),))
    if len(label) == 2:
        return VertexClass("connecting", (int(label[0]), int(label[1])))
    return VertexClass("interior")


def _edge(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class HanoiGraph:
    """Immutable explicit H_n.  ``vertices`` and ``edges`` are sorted."""

    n: int
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    _index: dict = field(init=False, repr=False, compare=False, default=None)

    def __post_init__(self):
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.vertices)})

    def __contains__(self, label) -> bool:
        return label in self._index

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise LabelError(f"vertex {label!r} is not in H_{self.n}") from None

    @cached_property
    def adjacency(self) -> dict[str, tuple[str, ...]]:
        nbrs: dict[str, list[str]] = {v: [] for v in self.vertices}
        for a, b in self.edges:
            nbrs[a].append(b)
            nbrs[b].append(a)
        return {v: tuple(sorted(ns)) for v, ns in nbrs.items()}

    def neighbors(self, label: str) -> tuple[str, ...]:
        self.index(label)
        return self.adjacency[label]

    def degree(self, label: str) -> int:
        return len(self.neighbors(label))

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """(indptr, indices) int32 arrays over vertex indices, neighbors sorted."""
        indptr = np.zeros(len(self.vertices) + 1, dtype=np.int32)
        indices = []
        for i, v in enumerate(self.vertices):
            ns = self.adjacency[v]
            indptr[i + 1] = indptr[i] + len(ns)
            indices.extend(self._index[u] for u in ns)
        return indptr, np.asarray(indices, dtype=np.int32)


def _level_lists(n: int) -> tuple[list[str], list[tuple[str, str]]]:
    verts = list(PEGS)
    edges = [("0", "1"), ("0", "2"), ("1", "2")]
    for _ in range(1, n):
        new_v, new_e = [], []
        for k in PEGS:
            # only a single-digit label equal to k can collapse
            new_v.extend(compress_label(k + v) if v == k else k + v for v in verts)
            for a, b in edges:
                a2 = k if a == k else k + a
                b2 = k if b == k else k + b
                new_e.append(_edge(a2, b2))
        new_e.extend(CROSS_EDGES)
        verts, edges = new_v, new_e
    return verts, edges


def build_graph(n: int, max_n: int | None = None) -> HanoiGraph:
    """Build H_n by the recursive three-copy rule.

    Copy k of H_{n-1} receives prefix k; the copies are joined by the
    edges (01,10), (02,20), (12,21).
    """
    limit = max_explicit_n() if max_n is None else max_n
    if not isinstance(n, int) or isinstance(n, bool) or n < 1 or n > limit:
        raise GraphSizeError(f"level n={n!r} outside 1..{limit} (explicit-graph size limit {limit})")
    verts, edges = _level_lists(n)
    return HanoiGraph(n, tuple(sorted(verts)), tuple(sorted(edges)))


EXPORT_FORMATS = ("edge-list", "adjacency-json")


def export_edges(graph: HanoiGraph, format: str = "edge-list") -> bytes:
    if format == "edge-list":
        return "".join(f"{a}\t{b}\n" for a, b in graph.edges).encode("utf-8")
    if format in ("adjacency-json", "json"):
        doc = {
            "n": graph.n,
            "vertices": list(graph.vertices),
            "edges": [list(e) for e in graph.edges],
        }
        return (json.dumps(doc, separators=(",", ":")) + "\n").encode("utf-8")
    raise FormatError(f"unsupported export format {format!r}; expected one of {EXPORT_FORMATS}")


def read_edge_list(data: bytes | str) -> list[tuple[str, str]]:
    """Parse the tab-separated edge-list format back into canonical pairs."""
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not all(parts):
            raise FormatError(f"line {lineno}: expected 'label<TAB>label', got {line!r}")
        edges.append(_edge(parts[0], parts[1]))
    return edges
