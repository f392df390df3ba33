import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import to_nx, unicyclic_classes_nx
from sombor_unicyclic.canon import (
    CanonicalForm,
    IsomorphismBoundError,
    canonical_form,
    canonical_graph,
    is_isomorphic,
)
from sombor_unicyclic.graph import Graph, cycle_graph, is_unicyclic, path_graph
from sombor_unicyclic.random_graphs import random_unicyclic
from sombor_unicyclic.sombor import ExtremalParams, build_extremal


def test_c3_plus_pendant_relabelled_is_isomorphic():
    a = Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    b = Graph(4, [(1, 2), (2, 3), (1, 3), (0, 1)])
    assert canonical_form(a) == canonical_form(b)
    assert is_isomorphic(a, b)


def test_c4_vs_c3_plus_pendant_differ():
    assert canonical_form(cycle_graph(4)) != canonical_form(Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)]))


def test_two_classes_on_four_vertices():
    forms = set()
    for chosen in combinations(combinations(range(4), 2), 4):
        g = Graph(4, chosen)
        if is_unicyclic(g):
            forms.add(canonical_form(g))
    assert len(forms) == 2


def test_bound_enforced():
    with pytest.raises(IsomorphismBoundError):
        canonical_form(path_graph(12))
    assert canonical_form(path_graph(12), bound=12).n == 12


def test_form_round_trips_to_graph():
    rng = random.Random(8)
    for _ in range(100):
        g = random_unicyclic(rng.randint(3, 10), rng)
        form = canonical_form(g)
        h = form.to_graph()
        assert canonical_form(h) == form
        assert canonical_graph(g) == h
        assert nx.is_isomorphic(to_nx(g), to_nx(h))
    assert str(CanonicalForm(3, 7)) == "3:7"


@settings(max_examples=200, deadline=None)
@given(st.integers(3, 10), st.randoms(use_true_random=False))
def test_relabel_invariance(n, r):
    g = random_unicyclic(n, r)
    perm = list(range(n))
    r.shuffle(perm)
    assert canonical_form(g) == canonical_form(g.relabel(perm))


def test_agrees_with_networkx_isomorphism():
    rng = random.Random(4)
    graphs = [random_unicyclic(7, rng, cycle_length=rng.randint(3, 5)) for _ in range(40)]
    for a, b in combinations(graphs, 2):
        assert is_isomorphic(a, b) == nx.is_isomorphic(to_nx(a), to_nx(b))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_class_counts_match_networkx_dedupe(n):
    reps = unicyclic_classes_nx(n)
    forms = {canonical_form(Graph(n, list(G.edges))) for G in reps}
    assert len(forms) == len(reps)


def test_documented_non_isomorphic_pairs():
    c5 = cycle_graph(5)
    c4p = Graph(5, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)])
    assert not is_isomorphic(c5, c4p)
    g72 = build_extremal(ExtremalParams(7, 2))
    two_paths = Graph(7, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 5), (5, 6)])
    assert not is_isomorphic(g72, two_paths)
    assert is_isomorphic(g72, g72.relabel([6, 5, 4, 3, 2, 1, 0]))
