import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hanoispan.errors import FormatError, GraphSizeError, LabelError
from hanoispan.graph import (
    build_graph,
    check_label,
    classify_vertex,
    compress_label,
    export_edges,
    permute_label,
    read_edge_list,
)

PERMS = ["".join(p) for p in itertools.permutations("012")]


def test_triangle():
    g = build_graph(1)
    assert g.vertices == ("0", "1", "2")
    assert g.edges == (("0", "1"), ("0", "2"), ("1", "2"))


def test_h3_size():
    g = build_graph(3)
    assert (len(g.vertices), len(g.edges)) == (27, 39)


def test_h2_neighbors_of_01():
    assert set(build_graph(2).neighbors("01")) == {"0", "02", "10"}


@pytest.mark.parametrize("n", range(1, 8))
def test_counts_and_degree_sequence(n):
    g = build_graph(n)
    assert len(g.vertices) == len(set(g.vertices)) == 3**n
    assert 2 * len(g.edges) == 3 * (3**n - 1)
    degs = sorted(g.degree(v) for v in g.vertices)
    assert degs[:3] == [2, 2, 2] and set(degs[3:]) <= {3}
    assert {v for v in g.vertices if g.degree(v) == 2} == {"0", "1", "2"}


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("sigma", PERMS)
def test_peg_permutation_is_automorphism(n, sigma):
    g = build_graph(n)
    mapped = {tuple(sorted((permute_label(a, sigma), permute_label(b, sigma)))) for a, b in g.edges}
    assert mapped == set(g.edges)


def test_edges_canonical_and_sorted():
    g = build_graph(4)
    assert all(a < b for a, b in g.edges)
    assert list(g.edges) == sorted(g.edges)


def test_csr_matches_adjacency():
    g = build_graph(3)
    indptr, indices = g.csr
    for i, v in enumerate(g.vertices):
        got = {g.vertices[j] for j in indices[indptr[i]:indptr[i + 1]]}
        assert got == set(g.neighbors(v))


@pytest.mark.parametrize("raw,want", [("0100", "010"), ("000", "0"), ("010", "010"), ([0, 1, 1], "01")])
def test_compress(raw, want):
    assert compress_label(raw) == want


@given(st.text(alphabet="012", min_size=1, max_size=12))
def test_compress_idempotent(raw):
    c = compress_label(raw)
    assert compress_label(c) == c
    assert raw.startswith(c)
    assert set(raw[len(c):]) <= {c[-1]}


@pytest.mark.parametrize("bad", ["", "013", "a"])
def test_compress_rejects(bad):
    with pytest.raises(LabelError):
        compress_label(bad)


def test_classify():
    assert str(classify_vertex("0")) == "Outmost(0)"
    assert classify_vertex("01").kind == "connecting"
    assert classify_vertex("01").pegs == (0, 1)
    assert str(classify_vertex("010")) == "Interior"


def test_check_label():
    assert check_label("010", 3) == "010"
    for bad, n in [("0100", 4), ("0101", 3), ("", 2)]:
        with pytest.raises(LabelError):
            check_label(bad, n)


def test_size_cap(monkeypatch):
    with pytest.raises(GraphSizeError, match="12"):
        build_graph(13)
    monkeypatch.setenv("HANOISPAN_MAX_N", "2")
    with pytest.raises(GraphSizeError):
        build_graph(3)
    assert len(build_graph(3, max_n=3).vertices) == 27


@pytest.mark.parametrize("bad", [0, -1, 1.5, "2"])
def test_bad_level(bad):
    with pytest.raises((ValueError, TypeError)):
        build_graph(bad)


def test_edge_list_h1():
    assert export_edges(build_graph(1)) == b"0\t1\n0\t2\n1\t2\n"


def test_edge_list_h2_roundtrip():
    g = build_graph(2)
    data = export_edges(g, "edge-list")
    lines = data.decode().splitlines()
    assert len(lines) == 12 and "01\t10" in lines
    assert b"\r" not in data
    assert read_edge_list(data) == list(g.edges)
    assert export_edges(build_graph(2)) == data


def test_adjacency_json(schemas):
    import jsonschema

    doc = json.loads(export_edges(build_graph(2), "adjacency-json"))
    jsonschema.validate(doc, schemas["graph"])
    assert doc["n"] == 2 and len(doc["vertices"]) == 9


def test_unknown_format():
    with pytest.raises(FormatError):
        export_edges(build_graph(1), "graphml")


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 5), st.data())
def test_prefix_structure(n, data):
    # every vertex of H_n is a vertex of H_{n-1} with a peg digit prepended
    g = build_graph(n)
    v = data.draw(st.sampled_from(g.vertices))
    if n > 1 and len(v) > 1:
        assert v[1:] in build_graph(n - 1)
