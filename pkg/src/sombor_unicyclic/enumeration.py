"""Isomorph-free generation of unicyclic graphs and exhaustive max-SO search.

A unicyclic graph is a cycle with a rooted tree hanging at every cycle vertex
(possibly a bare root).  Classes correspond to necklaces of rooted trees up to
rotation and reflection, so each class is produced once by keeping only the
dihedrally smallest tree sequence.  Canonical forms double-check that.
"""

from __future__ import annotations

import csv
import io
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

from sombor_unicyclic.canon import CanonicalForm, canonical_form
from sombor_unicyclic.graph import Graph, pendant_count
from sombor_unicyclic.sombor import (
    EQ_TOL,
    ExtremalParams,
    InvalidParams,
    build_extremal,
    closed_form_so,
    sombor_index,
)

MIN_ORDER = 3
MAX_ORDER = 10
DENSE_MAX_ORDER = 7
UNIQUENESS_GAP = 1e-3


class EnumerationRangeError(ValueError):
    pass


# -- rooted trees ----------------------------------------------------------------
# A rooted tree on s vertices is named by (s, i): the i-th entry of rooted_trees(s).
# Its code is the tuple of its children's names, non-increasing.


@lru_cache(maxsize=None)
def rooted_trees(s: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    if s < 1:
        raise ValueError("a rooted tree has at least one vertex")
    return tuple(_forests(s - 1, (s, 0)))


def _forests(total: int, bound: tuple[int, int]) -> Iterator[tuple[tuple[int, int], ...]]:
    """Non-increasing tuples of tree names with sizes summing to ``total``, each < ``bound``."""
    if total == 0:
        yield ()
        return
    for size in range(min(total, bound[0]), 0, -1):
        count = len(rooted_trees(size)) if size < bound[0] else bound[1] + 1
        for idx in range(count - 1, -1, -1):
            if (size, idx) > bound:
                continue
            for rest in _forests(total - size, (size, idx)):
                yield ((size, idx), *rest)


def rooted_tree_count(s: int) -> int:
    return len(rooted_trees(s))


def _attach(edges: list[tuple[int, int]], root: int, name: tuple[int, int], next_label: int) -> int:
    for child in rooted_trees(name[0])[name[1]]:
        v = next_label
        edges.append((root, v))
        next_label = _attach(edges, v, child, next_label + 1)
    return next_label


# -- unicyclic classes -------------------------------------------------------------


def _necklaces(n: int, ell: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """Dihedrally minimal sequences of ``ell`` rooted trees with ``n`` vertices in total."""
    seq: list[tuple[int, int]] = []

    def rec(remaining: int) -> Iterator[tuple[tuple[int, int], ...]]:
        slots = ell - len(seq)
        if slots == 0:
            if remaining == 0:
                yield tuple(seq)
            return
        for size in range(1, remaining - (slots - 1) + 1):
            for idx in range(len(rooted_trees(size))):
                name = (size, idx)
                if seq and name < seq[0]:
                    continue
                seq.append(name)
                yield from rec(remaining - size)
                seq.pop()

    for cand in rec(n):
        rev = cand[::-1]
        if all(cand <= cand[i:] + cand[:i] and cand <= rev[i:] + rev[:i] for i in range(ell)):
            yield cand


def _necklace_graph(n: int, cand: Sequence[tuple[int, int]]) -> Graph:
    ell = len(cand)
    edges = [(i, (i + 1) % ell) for i in range(ell)]
    label = ell
    for i, name in enumerate(cand):
        label = _attach(edges, i, name, label)
    return Graph(n, [(min(a, b), max(a, b)) for a, b in edges])


def _classes_for_length(n: int, ell: int) -> list[tuple[CanonicalForm, Graph]]:
    found: dict[CanonicalForm, Graph] = {}
    for cand in _necklaces(n, ell):
        g = _necklace_graph(n, cand)
        found.setdefault(canonical_form(g), g)
    return sorted(found.items(), key=lambda item: item[0])


def _check_order(n: int) -> None:
    if not MIN_ORDER <= n <= MAX_ORDER:
        raise EnumerationRangeError(f"n must lie in [{MIN_ORDER}, {MAX_ORDER}], got {n}")


@lru_cache(maxsize=16)
def _all_classes(n: int, workers: int = 1) -> tuple[tuple[CanonicalForm, Graph], ...]:
    lengths = range(3, n + 1)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_classes_for_length, [n] * len(lengths), lengths))
    else:
        parts = [_classes_for_length(n, ell) for ell in lengths]
    out = []
    seen: set[CanonicalForm] = set()
    for part in parts:
        for cf, g in part:
            if cf not in seen:
                seen.add(cf)
                out.append((cf, g))
    return tuple(out)


def enumerate_unicyclic_forms(
    n: int, k_filter: int | None = None, workers: int = 1
) -> list[tuple[CanonicalForm, Graph]]:
    """``(canonical form, representative)`` per class, ordered by cycle length then form."""
    _check_order(n)
    items = _all_classes(n, max(1, workers))
    if k_filter is None:
        return list(items)
    return [(cf, g) for cf, g in items if pendant_count(g) == k_filter]


def enumerate_unicyclic(n: int, k_filter: int | None = None, workers: int = 1) -> Iterator[Graph]:
    """One representative per isomorphism class of connected unicyclic graphs on ``n`` vertices.

    Representatives label the cycle ``0..l-1`` in order and their trees after it.
    """
    for _, g in enumerate_unicyclic_forms(n, k_filter, workers):
        yield g


def enumerate_unicyclic_dense(n: int) -> set[CanonicalForm]:
    """Brute-force oracle: every ``n``-edge subset of ``K_n``, kept if connected, deduped."""
    if not MIN_ORDER <= n <= DENSE_MAX_ORDER:
        raise EnumerationRangeError(f"dense oracle supports n in [{MIN_ORDER}, {DENSE_MAX_ORDER}], got {n}")
    pairs = list(combinations(range(n), 2))
    full = (1 << n) - 1
    out: set[CanonicalForm] = set()
    for chosen in combinations(range(len(pairs)), n):
        masks = [0] * n
        for idx in chosen:
            a, b = pairs[idx]
            masks[a] |= 1 << b
            masks[b] |= 1 << a
        reach = 1
        frontier = 1
        while frontier:
            nxt = 0
            bits = frontier
            while bits:
                low = bits & -bits
                nxt |= masks[low.bit_length() - 1]
                bits ^= low
            frontier = nxt & ~reach
            reach |= nxt
        if reach == full:
            out.add(canonical_form(Graph(n, [pairs[i] for i in chosen])))
    return out


# -- exhaustive search --------------------------------------------------------------


@dataclass(frozen=True)
class SearchReport:
    params: ExtremalParams
    class_size: int
    max_value: float
    maximizers: tuple[CanonicalForm, ...]
    matches_extremal: bool
    closed_form: float
    runner_up_gap: float
    runtime_ms: float

    @property
    def num_maximizers(self) -> int:
        return len(self.maximizers)

    @property
    def passed(self) -> bool:
        return self.matches_extremal and self.num_maximizers == 1


def _search(p: ExtremalParams, items: Sequence[tuple[CanonicalForm, Graph]], started: float) -> SearchReport:
    scored = [(sombor_index(g), cf) for cf, g in items]
    best = max(so for so, _ in scored)
    maximizers = tuple(sorted(cf for so, cf in scored if so >= best - EQ_TOL))
    rest = [so for so, _ in scored if so < best - EQ_TOL]
    gap = best - max(rest) if rest else math.inf
    target = canonical_form(build_extremal(p))
    return SearchReport(
        params=p,
        class_size=len(items),
        max_value=best,
        maximizers=maximizers,
        matches_extremal=maximizers == (target,),
        closed_form=closed_form_so(p),
        runner_up_gap=gap,
        runtime_ms=(time.perf_counter() - started) * 1000.0,
    )


def max_so_search(p: ExtremalParams, workers: int = 1) -> SearchReport:
    if p.N > MAX_ORDER:
        raise EnumerationRangeError(f"exhaustive search supports N <= {MAX_ORDER}, got {p.N}")
    started = time.perf_counter()
    return _search(p, enumerate_unicyclic_forms(p.N, p.k, workers), started)


def verify_theorem(n_max: int, workers: int = 1) -> list[SearchReport]:
    """One report per valid ``(N, k)`` with ``4 <= N <= n_max``, ordered by N then k."""
    if not 4 <= n_max <= MAX_ORDER:
        raise EnumerationRangeError(f"n_max must lie in [4, {MAX_ORDER}], got {n_max}")
    reports = []
    for n in range(4, n_max + 1):
        started = time.perf_counter()
        items = enumerate_unicyclic_forms(n, None, workers)
        by_k: dict[int, list] = {}
        for cf, g in items:
            by_k.setdefault(pendant_count(g), []).append((cf, g))
        for k in range(1, n - 2):
            reports.append(_search(ExtremalParams(n, k), by_k.get(k, []), started))
            started = time.perf_counter()
    return reports


# -- serialization --------------------------------------------------------------------

CSV_COLUMNS = ("N", "k", "classSize", "maxValue", "numMaximizers", "matchesExtremal", "runnerUpGap", "runtimeMs")


def _num(x: float) -> str:
    return f"{x:.10g}"


def reports_to_csv(reports: Sequence[SearchReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in reports:
        writer.writerow([
            r.params.N,
            r.params.k,
            r.class_size,
            _num(r.max_value),
            r.num_maximizers,
            str(r.matches_extremal).lower(),
            _num(r.runner_up_gap),
            f"{r.runtime_ms:.3f}",
        ])
    return buf.getvalue()


def reports_to_text(reports: Sequence[SearchReport]) -> str:
    """One record per class; timing is left out so the text is reproducible."""
    blocks = []
    for r in reports:
        blocks.append("\n".join([
            f"[class N={r.params.N} k={r.params.k}]",
            f"classSize = {r.class_size}",
            f"maxValue = {_num(r.max_value)}",
            f"closedForm = {_num(r.closed_form)}",
            f"numMaximizers = {r.num_maximizers}",
            f"maximizers = {' '.join(str(cf) for cf in r.maximizers)}",
            f"matchesExtremal = {str(r.matches_extremal).lower()}",
            f"runnerUpGap = {_num(r.runner_up_gap)}",
        ]))
    return "\n\n".join(blocks) + "\n"


def reports_table(reports: Sequence[SearchReport]) -> str:
    header = f"{'N':>3} {'k':>3} {'class':>6} {'maxValue':>14} {'closedForm':>14} {'#max':>5} {'match':>6} {'gap':>12}"
    lines = [header]
    for r in reports:
        lines.append(
            f"{r.params.N:>3} {r.params.k:>3} {r.class_size:>6} {_num(r.max_value):>14} "
            f"{_num(r.closed_form):>14} {r.num_maximizers:>5} {str(r.matches_extremal).lower():>6} "
            f"{_num(r.runner_up_gap):>12}"
        )
    return "\n".join(lines) + "\n"


__all__ = [
    "CSV_COLUMNS",
    "EnumerationRangeError",
    "InvalidParams",
    "SearchReport",
    "enumerate_unicyclic",
    "enumerate_unicyclic_dense",
    "enumerate_unicyclic_forms",
    "max_so_search",
    "reports_table",
    "reports_to_csv",
    "reports_to_text",
    "rooted_tree_count",
    "rooted_trees",
    "verify_theorem",
]
