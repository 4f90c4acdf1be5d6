import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hanoispan import _fallback, kernels
from hanoispan.graph import build_graph

compiled = pytest.importorskip("hanoispan._kernels")


def test_backend_selected():
    assert kernels.BACKEND == "cython"


def test_splitmix_reference_values():
    # first outputs of SplitMix64 seeded with 0 (published reference stream)
    assert _fallback.stream_state(0, 0) == 0xE220A8397B1DCDAF
    assert _fallback.stream_state(0, 1) == 0x6E789E6AA1B965F4


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 8).flatmap(
    lambda k: st.lists(st.lists(st.integers(-10**6, 10**6), min_size=k, max_size=k), min_size=k, max_size=k)))
def test_bareiss_backends_agree(rows):
    assert compiled.bareiss_det(rows) == _fallback.bareiss_det(rows)


def test_bareiss_big_integers():
    rows = [[10**30 + i * j for j in range(5)] for i in range(5)]
    rows[0][0] += 1
    assert compiled.bareiss_det(rows) == _fallback.bareiss_det(rows)


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("seed", [0, 99, 2**64 - 1])
def test_wilson_backends_identical(n, seed):
    indptr, indices = build_graph(n).csr
    a = compiled.wilson_parents(indptr, indices, 0, seed, 17, 50)
    b = _fallback.wilson_parents(indptr, indices, 0, seed, 17, 50)
    assert a.dtype == b.dtype == np.int32
    assert np.array_equal(a, b)


def test_degree_counts_backends_identical():
    g = build_graph(3)
    indptr, indices = g.csr
    v = g.index("010")
    a = compiled.wilson_degree_counts(indptr, indices, 0, v, 3, 0, 500)
    b = _fallback.wilson_degree_counts(indptr, indices, 0, v, 3, 0, 500)
    assert np.array_equal(a, b) and a.sum() == 500


def test_forced_fallback(monkeypatch):
    import importlib

    monkeypatch.setenv("HANOISPAN_PURE_PYTHON", "1")
    try:
        mod = importlib.reload(kernels)
        assert mod.BACKEND == "python"
        assert mod.wilson_parents is _fallback.wilson_parents
    finally:
        monkeypatch.delenv("HANOISPAN_PURE_PYTHON")
        importlib.reload(kernels)
    assert kernels.BACKEND == "cython"
