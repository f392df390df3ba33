"""Simple undirected graphs on dense integer vertices, plus unicyclic decomposition.

Vertices are ``0..n-1``.  Edges are kept as a read-only ``(m, 2)`` int64 array
with ``u < v`` in every row and rows sorted lexicographically, so iteration
order (and therefore everything downstream) is deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Mapping

import numpy as np


class GraphError(ValueError):
    pass


class EdgeListError(GraphError):
    """Malformed edge-list text; ``lineno`` is 1-based (0 when not tied to a line)."""

    def __init__(self, message: str, lineno: int = 0) -> None:
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno else message)


class Graph:
    """Immutable simple graph.

    ``edges`` may be any iterable of vertex pairs or an integer array of shape
    ``(m, 2)``.  Self-loops, duplicate edges and out-of-range vertices raise
    :class:`GraphError`.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] | np.ndarray = ()) -> None:
        n = int(n)
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        arr = np.array(list(edges) if not isinstance(edges, np.ndarray) else edges, dtype=np.int64)
        if arr.size == 0:
            arr = np.empty((0, 2), dtype=np.int64)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise GraphError("edges must be pairs of vertices")
        arr = np.sort(arr, axis=1)
        if arr.shape[0]:
            if arr.min() < 0 or arr.max() >= n:
                raise GraphError(f"edge endpoint outside 0..{n - 1}")
            if np.any(arr[:, 0] == arr[:, 1]):
                loop = int(arr[arr[:, 0] == arr[:, 1]][0, 0])
                raise GraphError(f"self-loop at vertex {loop}")
            arr = arr[np.lexsort((arr[:, 1], arr[:, 0]))]
            dup = np.all(arr[1:] == arr[:-1], axis=1)
            if np.any(dup):
                u, v = arr[1:][dup][0]
                raise GraphError(f"duplicate edge ({u}, {v})")
        arr = np.ascontiguousarray(arr)
        arr.flags.writeable = False
        self._n = n
        self._edges = arr

    @classmethod
    def _trusted(cls, n: int, arr: np.ndarray) -> Graph:
        # Caller guarantees a normalized, sorted, validated, read-only int64 array.
        g = object.__new__(cls)
        g._n = n
        g._edges = arr
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return int(self._edges.shape[0])

    @property
    def edge_array(self) -> np.ndarray:
        return self._edges

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(map(tuple, self._edges.tolist()))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self._n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(np.bincount(self._edges.ravel(), minlength=self._n).tolist())

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Adjacency rows as integer bitmasks (bit ``u`` of ``masks[v]`` set iff ``u ~ v``)."""
        rows = [0] * self._n
        for u, v in self.edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return tuple(rows)

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def relabel(self, perm: Iterable[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        p = np.asarray(list(perm), dtype=np.int64)
        if sorted(p.tolist()) != list(range(self._n)):
            raise GraphError("relabeling must be a permutation of 0..n-1")
        return Graph(self._n, p[self._edges] if self.m else ())

    def edit(self, remove: Iterable[tuple[int, int]] = (), add: Iterable[tuple[int, int]] = ()) -> Graph:
        """New graph with ``remove`` deleted and ``add`` inserted (same vertex set)."""
        current = set(self.edges)
        for u, v in remove:
            key = (min(u, v), max(u, v))
            if key not in current:
                raise GraphError(f"cannot remove missing edge {key}")
            current.discard(key)
        for u, v in add:
            key = (min(u, v), max(u, v))
            if key in current:
                raise GraphError(f"cannot add existing edge {key}")
            current.add(key)
        return Graph(self._n, sorted(current))

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise GraphError(f"vertex {v} outside 0..{self._n - 1}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and np.array_equal(self._edges, other._edges)

    def __hash__(self) -> int:
        return hash((self._n, self._edges.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={list(self.edges)!r})"


def degree(g: Graph, v: int) -> int:
    g._check_vertex(v)
    return g.degrees[v]


def pendant_count(g: Graph) -> int:
    return sum(1 for d in g.degrees if d == 1)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    queue = deque([0])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.n


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n: int) -> Graph:
    """Star on ``n`` vertices with centre 0."""
    return Graph(n, [(0, i) for i in range(1, n)])


@dataclass(frozen=True)
class UnicyclicWitness:
    """A unicyclic graph split into its cycle and the trees hanging off it.

    ``cycle`` lists the cycle in walking order, starting at its smallest vertex
    and heading to the smaller of that vertex's two cycle neighbours.
    ``trees[r]`` holds one vertex set per branch at cycle vertex ``r`` (the
    root itself is not included).
    """

    graph: Graph
    cycle: tuple[int, ...]
    trees: Mapping[int, tuple[frozenset[int], ...]]

    @cached_property
    def cycle_set(self) -> frozenset[int]:
        return frozenset(self.cycle)

    @cached_property
    def root_of(self) -> dict[int, int]:
        roots = {r: r for r in self.cycle}
        for r, branches in self.trees.items():
            for branch in branches:
                for v in branch:
                    roots[v] = r
        return roots

    @property
    def length(self) -> int:
        return len(self.cycle)

    def on_cycle(self, v: int) -> bool:
        return v in self.cycle_set

    def cycle_position(self, v: int) -> int:
        return self.cycle.index(v)


def unicyclic_witness(g: Graph) -> UnicyclicWitness | None:
    """Decompose ``g`` into cycle + trees, or return ``None`` if it is not unicyclic."""
    if g.n < 3 or g.m != g.n or not is_connected(g):
        return None
    adj = g.adjacency
    deg = list(g.degrees)
    removed = [False] * g.n
    leaves = deque(v for v in range(g.n) if deg[v] == 1)
    while leaves:
        v = leaves.popleft()
        removed[v] = True
        for w in adj[v]:
            if not removed[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    leaves.append(w)
    core = [v for v in range(g.n) if not removed[v]]
    core_set = set(core)

    start = core[0]
    nxt = min(w for w in adj[start] if w in core_set)
    cycle = [start]
    prev, cur = start, nxt
    while cur != start:
        cycle.append(cur)
        step = [w for w in adj[cur] if w in core_set and w != prev]
        prev, cur = cur, step[0]

    trees: dict[int, tuple[frozenset[int], ...]] = {}
    for r in cycle:
        branches = []
        for c in sorted(adj[r] - core_set):
            comp = {c}
            queue = deque([c])
            while queue:
                u = queue.popleft()
                for w in adj[u]:
                    if w != r and w not in comp:
                        comp.add(w)
                        queue.append(w)
            branches.append(frozenset(comp))
        trees[r] = tuple(branches)
    return UnicyclicWitness(graph=g, cycle=tuple(cycle), trees=trees)


def is_unicyclic(g: Graph) -> bool:
    return unicyclic_witness(g) is not None


# -- edge-list text format -------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the ``N M`` header + ``u v`` lines format; ``#`` lines and blanks are skipped."""
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    last = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        last = lineno
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"expected two integers, got {line!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise EdgeListError("vertex and edge counts must be non-negative", lineno)
            header = (a, b)
            continue
        n, m = header
        if len(edges) == m:
            raise EdgeListError(f"more than the declared {m} edges", lineno)
        if not (0 <= a < n and 0 <= b < n):
            raise EdgeListError(f"vertex out of range 0..{n - 1}", lineno)
        if a == b:
            raise EdgeListError(f"self-loop at vertex {a}", lineno)
        key = (min(a, b), max(a, b))
        if key in seen:
            raise EdgeListError(f"duplicate edge {key}", lineno)
        seen.add(key)
        edges.append(key)
    if header is None:
        raise EdgeListError("missing 'N M' header line")
    if len(edges) != header[1]:
        raise EdgeListError(f"declared {header[1]} edges but found {len(edges)}", last)
    return Graph(header[0], edges)


def read_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text(encoding="utf-8"))


def format_edge_list(g: Graph, comment: str | None = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def write_edge_list(g: Graph, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(format_edge_list(g, comment), encoding="utf-8")
