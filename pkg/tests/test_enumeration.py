import math

import networkx as nx
import pytest

from oracles import extremal_nx, is_unicyclic_nx, so_direct, to_nx
from sombor_unicyclic.canon import canonical_form
from sombor_unicyclic.enumeration import (
    CSV_COLUMNS,
    EnumerationRangeError,
    enumerate_unicyclic,
    enumerate_unicyclic_dense,
    enumerate_unicyclic_forms,
    max_so_search,
    reports_table,
    reports_to_csv,
    reports_to_text,
    rooted_tree_count,
    verify_theorem,
)
from sombor_unicyclic.graph import Graph, pendant_count
from sombor_unicyclic.sombor import ExtremalParams, build_extremal, closed_form_so

# connected unicyclic graphs on n vertices, n = 3..10
UNICYCLIC_COUNTS = [1, 2, 5, 13, 33, 89, 240, 657]


def test_rooted_tree_counts():
    assert [rooted_tree_count(s) for s in range(1, 11)] == [1, 1, 2, 4, 9, 20, 48, 115, 286, 719]


@pytest.mark.parametrize("n, count", list(zip(range(3, 11), UNICYCLIC_COUNTS)))
def test_class_counts(n, count):
    graphs = list(enumerate_unicyclic(n))
    assert len(graphs) == count
    assert len({canonical_form(g) for g in graphs}) == count


def test_generated_graphs_are_unicyclic():
    for n in range(3, 10):
        for g in enumerate_unicyclic(n):
            assert is_unicyclic_nx(to_nx(g))


def test_filter_by_pendants():
    graphs = list(enumerate_unicyclic(5, 1))
    assert len(graphs) == 2
    assert all(pendant_count(g) == 1 for g in graphs)
    for n in range(4, 10):
        total = sum(len(list(enumerate_unicyclic(n, k))) for k in range(0, n - 2))
        assert total == UNICYCLIC_COUNTS[n - 3]


def test_output_is_deterministic():
    a = [(str(cf), g.edges) for cf, g in enumerate_unicyclic_forms(8)]
    b = [(str(cf), g.edges) for cf, g in enumerate_unicyclic_forms(8)]
    assert a == b


def test_parallel_matches_serial():
    serial = [cf for cf, _ in enumerate_unicyclic_forms(8, workers=1)]
    parallel = [cf for cf, _ in enumerate_unicyclic_forms(8, workers=2)]
    assert serial == parallel


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_dense_oracle_matches(n):
    assert {cf for cf, _ in enumerate_unicyclic_forms(n)} == enumerate_unicyclic_dense(n)


def test_range_errors():
    with pytest.raises(EnumerationRangeError):
        list(enumerate_unicyclic(2))
    with pytest.raises(EnumerationRangeError):
        list(enumerate_unicyclic(11))
    with pytest.raises(EnumerationRangeError):
        enumerate_unicyclic_dense(8)
    with pytest.raises(EnumerationRangeError):
        verify_theorem(3)
    with pytest.raises(EnumerationRangeError):
        max_so_search(ExtremalParams(11, 2))


def test_search_4_1():
    r = max_so_search(ExtremalParams(4, 1))
    assert r.class_size == 1
    assert r.maximizers == (canonical_form(build_extremal(ExtremalParams(4, 1))),)
    assert r.matches_extremal and r.passed
    assert math.isinf(r.runner_up_gap)


def test_search_5_2():
    r = max_so_search(ExtremalParams(5, 2))
    assert r.matches_extremal
    assert r.max_value == pytest.approx(closed_form_so(ExtremalParams(5, 2)), abs=1e-9)
    assert r.max_value == pytest.approx(20.0189, abs=1e-4)


def _true_maximizer(N, k):
    # the cycle on N-k vertices with all k pendants at one vertex
    G = nx.cycle_graph(N - k)
    G.add_edges_from((0, N - k + i) for i in range(k))
    return G


def test_search_finds_cycle_with_pendant_cluster_when_tail_exists():
    for N in range(5, 10):
        for k in range(1, N - 3):
            r = max_so_search(ExtremalParams(N, k))
            assert r.num_maximizers == 1
            assert not r.matches_extremal
            best = r.maximizers[0].to_graph()
            assert nx.is_isomorphic(to_nx(best), _true_maximizer(N, k))
            assert r.max_value > so_direct(extremal_nx(N, k)) + 0.1


def test_search_agrees_with_brute_scoring():
    r = max_so_search(ExtremalParams(7, 2))
    scores = sorted((so_direct(to_nx(g)) for g in enumerate_unicyclic(7, 2)), reverse=True)
    assert r.class_size == len(scores)
    assert r.max_value == pytest.approx(scores[0], abs=1e-9)
    assert r.runner_up_gap == pytest.approx(scores[0] - scores[1], abs=1e-9)


def test_verify_theorem_reports():
    reports = verify_theorem(6)
    assert [(r.params.N, r.params.k) for r in reports] == [(4, 1), (5, 1), (5, 2), (6, 1), (6, 2), (6, 3)]
    # only the classes without a tail beyond one edge keep the triangle-hub graph on top
    assert [r.passed for r in reports] == [True, False, True, False, False, True]
    assert len(verify_theorem(4)) == 1 and verify_theorem(4)[0].passed


def test_serializers():
    reports = verify_theorem(5)
    csv_text = reports_to_csv(reports)
    lines = csv_text.splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert lines[1].startswith("4,1,1,13.20180734,1,true,inf,")
    text = reports_to_text(reports)
    assert "[class N=5 k=1]" in text and "matchesExtremal = false" in text
    assert "runtime" not in text
    assert reports_to_text(reports) == text
    table = reports_table(reports)
    assert table.splitlines()[0].split()[:3] == ["N", "k", "class"]


def test_graph_from_form():
    for cf, g in enumerate_unicyclic_forms(6):
        assert canonical_form(cf.to_graph()) == cf
        assert isinstance(cf.to_graph(), Graph)
