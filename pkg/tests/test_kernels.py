"""Compiled and pure-Python kernels must agree bit for bit."""

import os
import random

import numpy as np
import pytest

from oracles import brute_code, so_direct, to_nx
from sombor_unicyclic import _kernels_py, kernels
from sombor_unicyclic.graph import Graph

compiled = pytest.importorskip("sombor_unicyclic._kernels", reason="extension not built")


def _random_graph(rng, n, p):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def test_backend_selection():
    forced = os.environ.get("SOMBOR_UNICYCLIC_PURE", "") not in ("", "0")
    assert kernels.BACKEND == ("python" if forced else "cython")


def test_canonical_labeling_backends_identical():
    rng = random.Random(11)
    for _ in range(1500):
        g = _random_graph(rng, rng.randint(0, 11), rng.random())
        assert compiled.canonical_labeling(g.n, g.masks) == _kernels_py.canonical_labeling(g.n, g.masks)


def _packed(n, edges, order):
    pos = {v: i for i, v in enumerate(order)}
    rel = {(min(pos[a], pos[b]), max(pos[a], pos[b])) for a, b in edges}
    code = 0
    for i in range(n):
        for j in range(i + 1, n):
            code = (code << 1) | ((i, j) in rel)
    return code


def test_canonical_code_is_complete_invariant():
    # brute_code (min over all n! orders) is a complete invariant by definition;
    # the search-tree minimum must induce the same partition into classes.
    rng = random.Random(5)
    graphs = [_random_graph(rng, 6, rng.random()) for _ in range(120)]
    graphs += [g.relabel(rng.sample(range(6), 6)) for g in graphs[:40]]
    fast = [kernels.canonical_labeling(g.n, g.masks)[0] for g in graphs]
    slow = [brute_code(g.n, g.edges) for g in graphs]
    for i in range(len(graphs)):
        for j in range(i + 1, len(graphs)):
            assert (fast[i] == fast[j]) == (slow[i] == slow[j])


def test_canonical_code_is_the_relabelled_adjacency():
    rng = random.Random(6)
    for _ in range(300):
        g = _random_graph(rng, rng.randint(1, 11), rng.random())
        code, order = kernels.canonical_labeling(g.n, g.masks)
        assert sorted(order) == list(range(g.n))
        assert code == _packed(g.n, g.edges, order)


def test_compiled_rejects_oversized():
    with pytest.raises(ValueError):
        compiled.canonical_labeling(12, [0] * 12)


def test_dispatcher_falls_back_beyond_compiled_bound():
    g = Graph(12, [(i, i + 1) for i in range(11)])
    code, _ = kernels.canonical_labeling(g.n, g.masks)
    assert code == _kernels_py.canonical_labeling(g.n, g.masks)[0]


def test_sombor_sum_backends_agree_with_direct_sum():
    rng = random.Random(2)
    for _ in range(300):
        g = _random_graph(rng, rng.randint(2, 40), rng.random() * 0.5)
        ref = so_direct(to_nx(g))
        a = compiled.sombor_sum(g.n, g.edge_array)
        b = _kernels_py.sombor_sum(g.n, g.edge_array)
        assert abs(a - ref) <= 1e-9 and abs(b - ref) <= 1e-9


def test_sombor_sum_accepts_other_layouts():
    edges = np.array([[0, 1], [1, 2], [0, 2]], dtype=np.int32)
    assert compiled.sombor_sum(3, edges) == pytest.approx(3 * np.sqrt(8))
    assert compiled.sombor_sum(3, np.asfortranarray(edges.astype(np.int64))) == pytest.approx(3 * np.sqrt(8))
    assert compiled.sombor_sum(3, np.empty((0, 2), dtype=np.int64)) == 0.0


@pytest.mark.parametrize("n,k", [(4, 1), (5, 2), (9, 3), (50, 47), (200, 1)])
def test_extremal_arrays_identical(n, k):
    assert np.array_equal(compiled.extremal_edge_array(n, k), _kernels_py.extremal_edge_array(n, k))
