"""Seeded random unicyclic graphs for property tests and ascent experiments."""

from __future__ import annotations

import random

from sombor_unicyclic.graph import Graph

STYLES = ("uniform", "paths", "bushy", "spider")


def random_unicyclic(
    n: int,
    rng: random.Random,
    *,
    cycle_length: int | None = None,
    style: str = "uniform",
    shuffle: bool = True,
) -> Graph:
    """A random connected unicyclic graph on ``n`` vertices.

    ``style`` biases the attached trees: ``uniform`` attaches each new vertex
    anywhere, ``paths`` prefers extending current leaves, ``bushy`` prefers
    high-degree vertices, ``spider`` grows long legs off a few cycle vertices.
    """
    if n < 3:
        raise ValueError("a unicyclic graph needs n >= 3")
    if style not in STYLES:
        raise ValueError(f"unknown style {style!r}; expected one of {', '.join(STYLES)}")
    ell = cycle_length if cycle_length is not None else rng.randint(3, n)
    if not 3 <= ell <= n:
        raise ValueError(f"cycle length must lie in [3, {n}], got {ell}")
    edges = [(i, (i + 1) % ell) for i in range(ell)]
    deg = [2] * ell + [0] * (n - ell)
    tips = list(range(ell))
    for v in range(ell, n):
        if style == "uniform":
            p = rng.randrange(v)
        elif style == "paths":
            leaves = [x for x in range(ell, v) if deg[x] == 1]
            p = rng.choice(leaves) if leaves and rng.random() < 0.75 else rng.randrange(v)
        elif style == "bushy":
            p = rng.choices(range(v), weights=[deg[x] ** 2 for x in range(v)])[0]
        else:
            if rng.random() < 0.7 and len(tips) > 0:
                i = rng.randrange(len(tips))
                p = tips[i]
                tips[i] = v
            else:
                p = rng.randrange(ell)
                tips.append(v)
        edges.append((p, v))
        deg[p] += 1
        deg[v] += 1
    if shuffle:
        perm = list(range(n))
        rng.shuffle(perm)
        edges = [(perm[a], perm[b]) for a, b in edges]
    return Graph(n, [(min(a, b), max(a, b)) for a, b in edges])
