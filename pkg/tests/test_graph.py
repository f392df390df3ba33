import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import is_unicyclic_nx, to_nx
from sombor_unicyclic.graph import (
    EdgeListError,
    Graph,
    GraphError,
    cycle_graph,
    degree,
    format_edge_list,
    is_connected,
    parse_edge_list,
    path_graph,
    pendant_count,
    read_edge_list,
    star_graph,
    unicyclic_witness,
    write_edge_list,
)
from sombor_unicyclic.random_graphs import STYLES, random_unicyclic


def test_edges_are_normalized_and_sorted():
    g = Graph(4, [(3, 1), (0, 2), (2, 1)])
    assert g.edges == ((0, 2), (1, 2), (1, 3))
    assert g.degrees == (1, 2, 2, 1)
    assert g.masks[2] == 0b0011


@pytest.mark.parametrize(
    "edges, msg",
    [([(0, 0)], "self-loop"), ([(0, 1), (1, 0)], "duplicate"), ([(0, 5)], "outside")],
)
def test_invalid_edges_rejected(edges, msg):
    with pytest.raises(GraphError, match=msg):
        Graph(3, edges)


def test_negative_order_rejected():
    with pytest.raises(GraphError):
        Graph(-1)


def test_degree_checks_vertex():
    g = path_graph(3)
    assert degree(g, 1) == 2
    with pytest.raises(GraphError):
        degree(g, 3)


def test_pendants_of_small_families():
    assert pendant_count(cycle_graph(5)) == 0
    assert pendant_count(path_graph(5)) == 2
    assert pendant_count(star_graph(5)) == 4


def test_edit_and_relabel():
    g = cycle_graph(4)
    h = g.edit(remove=[(0, 1)], add=[(0, 2)])
    assert h.edges == ((0, 2), (0, 3), (1, 2), (2, 3))
    with pytest.raises(GraphError):
        g.edit(remove=[(0, 2)])
    with pytest.raises(GraphError):
        g.edit(add=[(0, 1)])
    r = g.relabel([1, 2, 3, 0])
    assert r == g
    with pytest.raises(GraphError):
        g.relabel([0, 0, 1, 2])


def test_equality_and_hash():
    a = Graph(3, [(0, 1), (1, 2)])
    b = Graph(3, [(2, 1), (1, 0)])
    assert a == b and hash(a) == hash(b)
    assert a != Graph(4, [(0, 1), (1, 2)])


def test_witness_c3_and_c3_plus_pendant():
    w = unicyclic_witness(cycle_graph(3))
    assert w is not None and w.length == 3 and all(not w.trees[r] for r in w.cycle)
    g = Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    w = unicyclic_witness(g)
    assert w.cycle_set == {0, 1, 2}
    assert w.trees[2] == (frozenset({3}),)
    assert w.root_of[3] == 2


def test_witness_rejects_non_unicyclic():
    assert unicyclic_witness(path_graph(5)) is None
    two_triangles = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert unicyclic_witness(two_triangles) is None
    assert unicyclic_witness(Graph(4, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3)])) is None


def test_witness_cycle_is_a_walk():
    rng = random.Random(3)
    for _ in range(200):
        g = random_unicyclic(rng.randint(3, 14), rng, style=rng.choice(STYLES))
        w = unicyclic_witness(g)
        cyc = w.cycle
        assert cyc[0] == min(cyc)
        assert all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))
        assert set(w.root_of) == set(range(g.n))
        nx_cycle = {a for a, _ in nx.find_cycle(to_nx(g))}
        assert set(cyc) == nx_cycle


@settings(max_examples=300, deadline=None)
@given(st.integers(3, 8).flatmap(lambda n: st.tuples(
    st.just(n),
    st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] < e[1]), max_size=n + 2),
)))
def test_witness_iff_connected_with_n_edges(data):
    n, edges = data
    g = Graph(n, edges)
    assert (unicyclic_witness(g) is not None) == is_unicyclic_nx(to_nx(g))
    assert is_connected(g) == nx.is_connected(to_nx(g))


def test_parse_round_trip(tmp_path):
    g = Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    text = format_edge_list(g, comment="c3 plus pendant")
    assert text.startswith("# c3 plus pendant\n4 4\n")
    assert parse_edge_list(text) == g
    path = tmp_path / "g.txt"
    write_edge_list(g, path)
    assert read_edge_list(path) == g


def test_parse_skips_comments_and_blanks():
    g = parse_edge_list("# hi\n\n3 2\n# mid\n0 1\n\n1 2\n")
    assert g.edges == ((0, 1), (1, 2))


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("3 3\n0 1\n1 x\n0 2\n", 3),
        ("3 2\n0 1\n0 1\n", 3),
        ("3 2\n0 1\n1 1\n", 3),
        ("3 2\n0 1\n0 7\n", 3),
        ("3 1\n0 1\n1 2\n", 3),
        ("3 3\n0 1\n1 2\n", 3),
        ("3 1 4\n", 1),
        ("-3 1\n", 1),
    ],
)
def test_parse_errors_carry_line_numbers(text, lineno):
    with pytest.raises(EdgeListError) as info:
        parse_edge_list(text)
    assert info.value.lineno == lineno
    assert str(info.value).startswith(f"line {lineno}:")


def test_parse_missing_header():
    with pytest.raises(EdgeListError, match="header"):
        parse_edge_list("# nothing\n")
