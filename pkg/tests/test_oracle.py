import itertools
import logging
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hanoispan import oracle
from hanoispan.counting import count_recursive
from hanoispan.errors import DisconnectedGraphError, EnumerationLimitError, LabelError
from hanoispan.graph import build_graph, export_edges, read_edge_list


def complete(k):
    return [(str(a), str(b)) for a, b in itertools.combinations(range(k), 2)]


def cycle(k):
    return [(f"v{i:02d}", f"v{(i + 1) % k:02d}") for i in range(k)]


def _det_fraction(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    n, det = len(m), Fraction(1)
    for k in range(n):
        piv = next((r for r in range(k, n) if m[r][k]), None)
        if piv is None:
            return 0
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        det *= m[k][k]
        for r in range(k + 1, n):
            f = m[r][k] / m[k][k]
            for c in range(k, n):
                m[r][c] -= f * m[k][c]
    return int(det)


def test_triangle():
    assert oracle.matrix_tree_count(complete(3)) == 3


def test_single_edge():
    assert oracle.matrix_tree_count([("a", "b")]) == 1


def test_two_edge_path_not_mistaken_for_vertex_list():
    assert oracle.matrix_tree_count((("a", "b"), ("b", "c"))) == 1


@pytest.mark.parametrize("k", range(2, 9))
def test_cayley(k):
    assert oracle.matrix_tree_count(complete(k)) == k ** (k - 2)


@pytest.mark.parametrize("k", range(3, 12))
def test_cycle(k):
    assert oracle.matrix_tree_count(cycle(k)) == k


@pytest.mark.parametrize("n", range(1, 5))
def test_hanoi_tree_counts(n):
    assert oracle.matrix_tree_count(build_graph(n)) == count_recursive(n).s


@pytest.mark.parametrize("n", [2, 3])
def test_minor_choice_independent(n):
    g = build_graph(n)
    counts = {oracle.matrix_tree_count(g, drop=d) for d in range(len(g.vertices))}
    assert counts == {count_recursive(n).s}


def test_disconnected_graph(caplog):
    with caplog.at_level(logging.WARNING):
        assert oracle.matrix_tree_count((["a", "b", "c", "d"], [("a", "b"), ("c", "d")])) == 0
    assert "disconnected" in caplog.text
    with pytest.raises(DisconnectedGraphError):
        oracle.degree_poly((["a", "b", "c"], [("a", "b")]), "a")


def test_accepts_edge_list_format():
    edges = read_edge_list(export_edges(build_graph(2)))
    assert oracle.matrix_tree_count(edges) == 135


def test_rejects_self_loop():
    with pytest.raises(ValueError):
        oracle.matrix_tree_count([("a", "a"), ("a", "b")])


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 7).flatmap(
    lambda k: st.lists(st.lists(st.integers(-6, 6), min_size=k, max_size=k), min_size=k, max_size=k)))
def test_bareiss_matches_rational_elimination(rows):
    assert oracle.determinant(rows) == _det_fraction(rows)


def test_empty_determinant():
    assert oracle.determinant([]) == 1


def test_enumerate_triangle():
    trees = list(oracle.enumerate_trees(build_graph(1)))
    assert len(trees) == 3 and all(len(t) == 2 for t in trees)


def test_enumerate_h2_tally():
    trees = list(oracle.enumerate_trees(build_graph(2)))
    assert len(trees) == len(set(trees)) == 135
    tally = Counter(sum("01" in e for e in t) for t in trees)
    assert dict(tally) == {1: 27, 2: 78, 3: 30}


def test_enumeration_is_deterministic():
    g = build_graph(2)
    assert list(oracle.enumerate_trees(g)) == list(oracle.enumerate_trees(g))


def test_enumeration_limit():
    with pytest.raises(EnumerationLimitError):
        next(oracle.enumerate_trees(build_graph(3), max_trees=10**6))


@st.composite
def connected_graphs(draw):
    k = draw(st.integers(2, 7))
    # random spanning tree plus extra edges keeps the graph connected
    edges = {(min(i, draw(st.integers(0, i - 1))), i) for i in range(1, k)}
    extra = draw(st.lists(st.tuples(st.integers(0, k - 1), st.integers(0, k - 1)), max_size=8))
    edges |= {(min(a, b), max(a, b)) for a, b in extra if a != b}
    return [(f"n{a}", f"n{b}") for a, b in sorted(edges)]


@settings(max_examples=60, deadline=None)
@given(connected_graphs())
def test_enumeration_count_equals_determinant(edges):
    trees = list(oracle.enumerate_trees(edges))
    verts = {v for e in edges for v in e}
    assert len(trees) == len(set(trees)) == oracle.matrix_tree_count(edges)
    for t in trees:
        assert len(t) == len(verts) - 1
        assert oracle.is_connected(sorted(verts), t)


@settings(max_examples=40, deadline=None)
@given(connected_graphs(), st.data())
def test_degree_poly_matches_enumeration(edges, data):
    verts = sorted({v for e in edges for v in e})
    v = data.draw(st.sampled_from(verts))
    deg = sum(v in e for e in edges)
    if deg > 3:
        with pytest.raises(ValueError):
            oracle.degree_poly(edges, v)
        return
    tally = Counter(sum(v in e for e in t) for t in oracle.enumerate_trees(edges))
    assert oracle.degree_poly(edges, v).coeffs == tuple(tally[i] for i in range(4))


def test_degree_poly_fixtures():
    assert oracle.degree_poly(build_graph(1), "0").coeffs == (0, 2, 1, 0)
    assert oracle.degree_poly(build_graph(2), "01").coeffs == (0, 27, 78, 30)


@pytest.mark.parametrize("n", [2, 3])
def test_degree_poly_nonnegative_and_partitions(n):
    g = build_graph(n)
    s = oracle.matrix_tree_count(g)
    for v in g.vertices:
        c = oracle.degree_poly(g, v).coeffs
        assert all(isinstance(x, int) and x >= 0 for x in c)
        assert sum(c) == s


def test_degree_poly_json(schemas):
    import jsonschema

    doc = oracle.degree_poly(build_graph(2), "01").to_json()
    jsonschema.validate(doc, schemas["degree-poly"])
    assert doc == {"vertex": "01", "coeffs": ["0", "27", "78", "30"]}


def test_degree_poly_unknown_vertex():
    with pytest.raises(LabelError):
        oracle.degree_poly(build_graph(2), "012")


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_class_counts(n):
    cv = count_recursive(n)
    assert oracle.class_counts(build_graph(n)) == {"s": cv.s, "p": cv.p, "t": cv.t, "r": cv.r, "l": cv.l}
