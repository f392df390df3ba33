"""Exact canonical forms and isomorphism testing for small graphs.

The search is individualization-refinement: an equitable degree partition,
then branching on the first non-singleton cell, with twin vertices pruned.
Every leaf is a full relabelling; the canonical code is the smallest packed
adjacency over all leaves.  The set of leaves depends only on the isomorphism
class, so the code is exact, not heuristic.
"""

from __future__ import annotations

from dataclasses import dataclass

from sombor_unicyclic import kernels
from sombor_unicyclic.graph import Graph, GraphError

MAX_EXACT_ORDER = 11


class IsomorphismBoundError(GraphError):
    pass


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Relabelling-invariant code; ordered by ``(n, code)``."""

    n: int
    code: int

    def to_graph(self) -> Graph:
        """The canonically labelled representative."""
        n = self.n
        total = n * (n - 1) // 2
        edges = []
        bit = total - 1
        for i in range(n):
            for j in range(i + 1, n):
                if (self.code >> bit) & 1:
                    edges.append((i, j))
                bit -= 1
        return Graph(n, edges)

    def __str__(self) -> str:
        return f"{self.n}:{self.code:x}"


def _check_bound(g: Graph, bound: int) -> None:
    if g.n > bound:
        raise IsomorphismBoundError(
            f"exact isomorphism is limited to {bound} vertices, graph has {g.n}"
        )


def canonical_labeling(g: Graph, bound: int = MAX_EXACT_ORDER) -> tuple[CanonicalForm, list[int]]:
    """Canonical form plus ``order`` with ``order[i]`` = vertex sent to label ``i``."""
    _check_bound(g, bound)
    code, order = kernels.canonical_labeling(g.n, g.masks)
    return CanonicalForm(g.n, code), order


def canonical_form(g: Graph, bound: int = MAX_EXACT_ORDER) -> CanonicalForm:
    return canonical_labeling(g, bound)[0]


def canonical_graph(g: Graph, bound: int = MAX_EXACT_ORDER) -> Graph:
    form, order = canonical_labeling(g, bound)
    perm = [0] * g.n
    for new, old in enumerate(order):
        perm[old] = new
    return g.relabel(perm)


def is_isomorphic(g: Graph, h: Graph, bound: int = MAX_EXACT_ORDER) -> bool:
    _check_bound(g, bound)
    _check_bound(h, bound)
    if g.n != h.n or g.m != h.m or sorted(g.degrees) != sorted(h.degrees):
        return False
    return canonical_form(g, bound) == canonical_form(h, bound)
