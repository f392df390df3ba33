"""Pure-Python versions of the hot kernels.

Must stay result-identical to ``_kernels.pyx``: same refinement schedule, same
search order, same leaf comparison.  ``tests/test_kernels.py`` pins this.
"""

from __future__ import annotations

import math

import numpy as np


def _refine(masks: list[int], cells: list[list[int]]) -> list[list[int]]:
    # Split every cell by neighbour count into each splitter cell, in order,
    # until a full pass splits nothing (the partition is then equitable).
    n_total = sum(len(c) for c in cells)
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(cells) and len(cells) < n_total:
            w = 0
            for v in cells[i]:
                w |= 1 << v
            out: list[list[int]] = []
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                buckets: dict[int, list[int]] = {}
                for v in cell:
                    buckets.setdefault((masks[v] & w).bit_count(), []).append(v)
                if len(buckets) == 1:
                    out.append(cell)
                else:
                    changed = True
                    out.extend(buckets[key] for key in sorted(buckets))
            cells = out
            i += 1
    return cells


def _leaf_code(masks: list[int], order: list[int]) -> int:
    code = 0
    n = len(order)
    for i in range(n):
        row = masks[order[i]]
        for j in range(i + 1, n):
            code = (code << 1) | ((row >> order[j]) & 1)
    return code


def _search(masks: list[int], cells: list[list[int]], n: int, best: list) -> None:
    if len(cells) == n:
        order = [c[0] for c in cells]
        code = _leaf_code(masks, order)
        if best[0] is None or code < best[0]:
            best[0] = code
            best[1] = order
        return
    t = next(i for i, c in enumerate(cells) if len(c) > 1)
    target = cells[t]
    tried: list[int] = []
    for v in sorted(target):
        # Swapping twins is an automorphism fixing the current partition, so
        # their subtrees yield the same leaf codes.
        if any((masks[u] & ~(1 << v)) == (masks[v] & ~(1 << u)) for u in tried):
            continue
        tried.append(v)
        rest = [x for x in target if x != v]
        child = cells[:t] + [[v], rest] + cells[t + 1:]
        _search(masks, _refine(masks, child), n, best)


def canonical_labeling(n: int, masks) -> tuple[int, list[int]]:
    """Return ``(code, order)`` where ``order[i]`` is the vertex placed at position ``i``.

    ``code`` packs the upper-triangular adjacency of the relabelled graph
    (pair ``(0,1)`` most significant).  Equal codes iff isomorphic.
    """
    masks = list(masks)
    if n == 0:
        return 0, []
    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(masks[v].bit_count(), []).append(v)
    cells = [by_degree[d] for d in sorted(by_degree)]
    best: list = [None, None]
    _search(masks, _refine(masks, cells), n, best)
    return best[0], best[1]


def sombor_sum(n: int, edges: np.ndarray) -> float:
    if edges.shape[0] == 0:
        return 0.0
    deg = np.bincount(edges.ravel(), minlength=n).astype(np.float64)
    terms = np.sqrt(deg[edges[:, 0]] ** 2 + deg[edges[:, 1]] ** 2)
    return math.fsum(terms.tolist())


def extremal_edge_array(n: int, k: int) -> np.ndarray:
    """Sorted edge rows of the triangle-hub graph: cycle 0-1-2, hub 2, pendants, then the tail path."""
    edges = np.empty((n, 2), dtype=np.int64)
    edges[0] = (0, 1)
    edges[1] = (0, 2)
    edges[2] = (1, 2)
    # hub edges to pendants 3..k+1 and to the first tail vertex k+2
    edges[3:k + 3, 0] = 2
    edges[3:k + 3, 1] = np.arange(3, k + 3)
    edges[k + 3:, 0] = np.arange(k + 2, n - 1)
    edges[k + 3:, 1] = np.arange(k + 3, n)
    edges.flags.writeable = False
    return edges
