"""Local rewrites of unicyclic graphs that never lower the Sombor index, and a
greedy ascent that chains them.

Every rewrite keeps the vertex count, the edge count, the pendant count and
unicyclicity.  Each public move function checks its own preconditions and
raises :class:`MoveNotApplicable` when they fail; :func:`find_moves` lists
every anchored move whose preconditions hold.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations, permutations

from sombor_unicyclic.graph import Graph, UnicyclicWitness, format_edge_list, pendant_count, unicyclic_witness
from sombor_unicyclic.sombor import is_extremal_shape, sombor_index


class MoveNotApplicable(ValueError):
    pass


class NotUnicyclicError(ValueError):
    pass


class Sign(enum.Enum):
    STRICT_INCREASE = "strict-increase"
    EQUAL = "equal"


class MoveKind(enum.Enum):
    # declaration order is the ascent priority
    TREE_SHIFT_ADJACENT = "TreeShiftAdjacent"
    TREE_SHIFT_DISTANT = "TreeShiftDistant"
    BRANCH_MIGRATE_NEAR = "BranchMigrateNear"
    BRANCH_MIGRATE_FAR = "BranchMigrateFar"
    CYCLE_SHORTEN_BY_ONE = "CycleShortenByOne"
    CYCLE_SHORTEN_BY_TWO = "CycleShortenByTwo"
    CYCLE_SHORTEN_LONG = "CycleShortenLong"
    HUB_CONSOLIDATE = "HubConsolidate"
    PATH_REBALANCE_EQUAL = "PathRebalanceEqual"
    PATH_REBALANCE_STRICT = "PathRebalanceStrict"

    @property
    def rank(self) -> int:
        return _RANK[self]

    @property
    def tag(self) -> str:
        return self.value


_RANK = {kind: i for i, kind in enumerate(MoveKind)}
PATH_KINDS = frozenset({MoveKind.PATH_REBALANCE_EQUAL, MoveKind.PATH_REBALANCE_STRICT})


@dataclass(frozen=True)
class MoveDescriptor:
    kind: MoveKind
    anchors: tuple[tuple[str, int], ...]
    predicted: Sign = Sign.STRICT_INCREASE

    def __getitem__(self, name: str) -> int:
        for key, value in self.anchors:
            if key == name:
                return value
        raise KeyError(name)

    def sort_key(self) -> tuple:
        return (self.kind.rank, tuple(v for _, v in self.anchors))

    def describe_anchors(self) -> str:
        return ",".join(f"{k}={v}" for k, v in self.anchors)


# -- structural helpers ----------------------------------------------------------


def _witness(g: Graph) -> UnicyclicWitness:
    w = unicyclic_witness(g)
    if w is None:
        raise NotUnicyclicError("graph is not unicyclic (needs connected with |E| = |V|)")
    return w


def _heaviest(g: Graph, candidates) -> int:
    """Highest degree, then lowest label."""
    deg = g.degrees
    return min(candidates, key=lambda x: (-deg[x], x))


def _tree_path(g: Graph, w: UnicyclicWitness, a: int, b: int) -> list[int] | None:
    """Vertex path a..b inside the attached tree containing both, or None."""
    root = w.root_of[a]
    if w.root_of[b] != root:
        return None
    # the tree plus its root; cycle neighbours of the root have other roots
    parent = {a: -1}
    stack = [a]
    while stack:
        x = stack.pop()
        for y in g.adjacency[x]:
            if y not in parent and w.root_of[y] == root:
                parent[y] = x
                stack.append(y)
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    return path[::-1]


def _interior_degree_two(g: Graph, path: list[int]) -> bool:
    deg = g.degrees
    return all(deg[x] == 2 for x in path[1:-1])


def _side(g: Graph, start: int, blocked: int) -> set[int]:
    """Vertices reachable from ``start`` without stepping onto ``blocked``."""
    seen = {start}
    stack = [start]
    adj = g.adjacency
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y != blocked and y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def _branches_are_paths(g: Graph, w: UnicyclicWitness, r: int) -> bool:
    deg = g.degrees
    return all(deg[x] <= 2 for branch in w.trees[r] for x in branch)


def _path_branches(g: Graph, w: UnicyclicWitness, r: int) -> list[tuple[int, int]]:
    """``(first vertex, length)`` of every branch at ``r`` that is a bare path."""
    deg = g.degrees
    out = []
    for branch in w.trees[r]:
        if all(deg[x] <= 2 for x in branch):
            first = next(x for x in branch if r in g.adjacency[x])
            out.append((first, len(branch)))
    return sorted(out)


def _path_end(g: Graph, root: int, first: int) -> list[int]:
    """Walk the path branch from ``first`` away from ``root``; returns its vertices."""
    path = [first]
    prev = root
    while True:
        nxt = [y for y in g.adjacency[path[-1]] if y != prev]
        if not nxt:
            return path
        prev = path[-1]
        path.append(nxt[0])


def _shift(g: Graph, receiver: int, giver: int, keep: set[int]) -> Graph:
    moved = sorted(g.adjacency[giver] - keep)
    return g.edit(
        remove=[(giver, x) for x in moved],
        add=[(receiver, x) for x in moved],
    )


# -- tree shifts -----------------------------------------------------------------


def _check_tree_pair(g: Graph, w: UnicyclicWitness, u: int, v: int) -> list[int]:
    deg = g.degrees
    if u == v:
        raise MoveNotApplicable("u and v must differ")
    if w.on_cycle(u) or w.on_cycle(v):
        raise MoveNotApplicable("tree shifts act inside an attached tree (u, v off the cycle)")
    if deg[u] < 3 or deg[v] < 3:
        raise MoveNotApplicable("need d(u) >= 3 and d(v) >= 3")
    if deg[u] < deg[v]:
        raise MoveNotApplicable(f"need d(u) >= d(v), got {deg[u]} < {deg[v]}")
    path = _tree_path(g, w, u, v)
    if path is None:
        raise MoveNotApplicable("u and v are not in the same attached tree")
    if not _interior_degree_two(g, path):
        raise MoveNotApplicable("a vertex of degree >= 3 lies strictly between u and v")
    return path


def tree_shift_adjacent(g: Graph, u: int, v: int) -> Graph:
    """Adjacent branching vertices: ``v`` keeps ``u`` and its heaviest other
    neighbour; everything else it had moves to ``u``."""
    w = _witness(g)
    path = _check_tree_pair(g, w, u, v)
    if len(path) != 2:
        raise MoveNotApplicable("u and v must be adjacent")
    v1 = _heaviest(g, g.adjacency[v] - {u})
    return _shift(g, u, v, {u, v1})


def tree_shift_distant(g: Graph, u: int, v: int) -> Graph:
    """Branching vertices joined by a path of degree-2 vertices: ``v`` keeps its
    path neighbour and its heaviest other neighbour, the rest move to ``u``."""
    w = _witness(g)
    path = _check_tree_pair(g, w, u, v)
    if len(path) < 3:
        raise MoveNotApplicable("u and v must be at distance >= 2")
    v2 = path[-2]
    v1 = _heaviest(g, g.adjacency[v] - {v2})
    return _shift(g, u, v, {v2, v1})


# -- branch migration --------------------------------------------------------------


def _check_branch(g: Graph, w: UnicyclicWitness, u: int, v: int) -> list[int]:
    deg = g.degrees
    if not w.on_cycle(u):
        raise MoveNotApplicable("u must lie on the cycle")
    if w.on_cycle(v) or w.root_of[v] != u:
        raise MoveNotApplicable("v must lie in a tree attached at u")
    if deg[v] < 3:
        raise MoveNotApplicable("need d(v) >= 3")
    path = _tree_path(g, w, u, v)
    if path is None or not _interior_degree_two(g, path):
        raise MoveNotApplicable("every vertex strictly between u and v must have degree 2")
    below = _side(g, v, path[-2]) - {v}
    if any(deg[x] >= 3 for x in below):
        raise MoveNotApplicable("v must be the only vertex of degree >= 3 in its subtree")
    return path


def branch_migrate(g: Graph, u: int, v: int) -> Graph:
    """Merge the branching of cycle vertex ``u`` and tree vertex ``v``.

    If ``d(u) >= d(v)``, ``v`` hands its subtrees to ``u`` (keeping its path
    neighbour and heaviest other neighbour).  Otherwise ``u`` hands its tree
    neighbours and its lighter cycle neighbour to ``v``, which reroutes the
    cycle through ``v``.
    """
    w = _witness(g)
    path = _check_branch(g, w, u, v)
    deg = g.degrees
    if deg[u] >= deg[v]:
        toward_u = path[-2]
        v1 = _heaviest(g, g.adjacency[v] - {toward_u})
        return _shift(g, u, v, {toward_u, v1})
    i = w.cycle_position(u)
    ring = (w.cycle[i - 1], w.cycle[(i + 1) % w.length])
    y = _heaviest(g, ring)
    return _shift(g, v, u, {path[1], y})


# -- cycle shortening ----------------------------------------------------------------


def _arcs(w: UnicyclicWitness, u: int, v: int) -> list[list[int]]:
    """Both cycle arcs from u to v, each as a vertex list starting at u."""
    cyc = w.cycle
    L = w.length
    i, j = cyc.index(u), cyc.index(v)
    fwd = [cyc[(i + s) % L] for s in range((j - i) % L + 1)]
    bwd = [cyc[(i - s) % L] for s in range((i - j) % L + 1)]
    return [fwd, bwd]


def _qualifying_arcs(g: Graph, w: UnicyclicWitness, u: int, v: int) -> list[list[int]]:
    out = []
    for arc in _arcs(w, u, v):
        length = len(arc) - 1
        if w.length - length >= 3 and _interior_degree_two(g, arc):
            out.append(arc)
    out.sort(key=lambda arc: (len(arc), arc[1]))
    return out


def _check_cycle_pair(g: Graph, w: UnicyclicWitness, u: int, v: int) -> None:
    if w.length < 4:
        raise MoveNotApplicable("cycle shortening needs a cycle of length >= 4")
    if u == v or not (w.on_cycle(u) and w.on_cycle(v)):
        raise MoveNotApplicable("u and v must be distinct cycle vertices")
    for x in (u, v):
        if not w.trees[x]:
            raise MoveNotApplicable(f"cycle vertex {x} carries no attached path")
        if not _branches_are_paths(g, w, x):
            raise MoveNotApplicable(f"attachments at {x} must be paths")


def cycle_shorten(g: Graph, u: int, v: int, via: int | None = None) -> Graph:
    """Delete the u..v arc of degree-2 cycle vertices, merge ``v`` into ``u`` and
    re-attach the freed vertices as a path extending the longest path at ``u``.

    ``via`` picks the arc by the neighbour of ``u`` it starts with (``v`` itself
    for the single-edge arc); by default the shortest admissible arc is used.
    """
    w = _witness(g)
    _check_cycle_pair(g, w, u, v)
    arcs = _qualifying_arcs(g, w, u, v)
    if via is not None:
        arcs = [arc for arc in arcs if arc[1] == via]
    if not arcs:
        raise MoveNotApplicable(
            "no u..v arc with only degree-2 interior vertices that leaves a cycle of length >= 3"
        )
    arc = arcs[0]
    freed = sorted(arc[1:])
    arc_edges = {(min(a, b), max(a, b)) for a, b in zip(arc, arc[1:])}
    edges = []
    for a, b in g.edges:
        if (a, b) in arc_edges:
            continue
        a, b = (u if a == v else a), (u if b == v else b)
        edges.append((min(a, b), max(a, b)))
    merged = Graph(g.n, edges)
    ends = []
    for first in (g.adjacency[u] | g.adjacency[v]) - w.cycle_set:
        body = _path_end(merged, u, first)
        ends.append((-len(body), body[-1]))
    _, z = min(ends)
    chain = [z, *freed]
    return Graph(g.n, edges + [(min(a, b), max(a, b)) for a, b in zip(chain, chain[1:])])


# -- hub consolidation -------------------------------------------------------------


def hub_consolidate(g: Graph, u: int, v: int) -> Graph:
    """On a triangle u-v-w with ``d(u) >= d(v) >= d(w)``, move every attachment of
    ``v`` onto ``u``."""
    w = _witness(g)
    if w.length != 3:
        raise MoveNotApplicable("hub consolidation needs a triangle")
    if u == v or not (w.on_cycle(u) and w.on_cycle(v)):
        raise MoveNotApplicable("u and v must be distinct triangle vertices")
    third = next(x for x in w.cycle if x not in (u, v))
    deg = g.degrees
    if deg[v] < 3:
        raise MoveNotApplicable("v has no attachments to move")
    if not deg[u] >= deg[v] >= deg[third]:
        raise MoveNotApplicable("need d(u) >= d(v) >= d(w)")
    if not all(_branches_are_paths(g, w, x) for x in w.cycle):
        raise MoveNotApplicable("attachments on the triangle must be paths")
    return _shift(g, u, v, {u, third})


# -- path rebalancing --------------------------------------------------------------


def path_rebalance(g: Graph, pl: int, pm: int) -> tuple[Graph, Sign]:
    """Move the pendant end of path ``pl`` onto the end of path ``pm``.

    Paths are named by their first vertex (the one adjacent to the cycle) and
    must hang off the same cycle vertex.  Length ``l >= 3`` leaves the index
    unchanged; ``l == 2`` raises it.  ``m >= 2`` in both cases.
    """
    w = _witness(g)
    if pl == pm:
        raise MoveNotApplicable("need two different paths")
    roots = []
    for first in (pl, pm):
        if w.on_cycle(first):
            raise MoveNotApplicable(f"{first} is a cycle vertex, not a path start")
        root = w.root_of[first]
        if root not in g.adjacency[first]:
            raise MoveNotApplicable(f"{first} is not adjacent to the cycle")
        roots.append(root)
    if roots[0] != roots[1]:
        raise MoveNotApplicable("paths are attached to different cycle vertices")
    root = roots[0]
    lengths = dict(_path_branches(g, w, root))
    if pl not in lengths or pm not in lengths:
        raise MoveNotApplicable("both branches must be bare paths")
    l, m = lengths[pl], lengths[pm]
    if l < 2:
        raise MoveNotApplicable("the donor path must have length >= 2")
    if m < 2:
        raise MoveNotApplicable("the receiving path must have length >= 2")
    donor = _path_end(g, root, pl)
    tail = _path_end(g, root, pm)[-1]
    out = g.edit(remove=[(donor[-2], donor[-1])], add=[(tail, donor[-1])])
    return out, (Sign.EQUAL if l >= 3 else Sign.STRICT_INCREASE)


# -- discovery ---------------------------------------------------------------------


def find_moves(g: Graph) -> list[MoveDescriptor]:
    w = _witness(g)
    deg = g.degrees
    adj = g.adjacency
    out: list[MoveDescriptor] = []

    for a in range(g.n):
        if w.on_cycle(a) or deg[a] < 3:
            continue
        for c in sorted(adj[a]):
            prev, cur, dist = a, c, 1
            while not w.on_cycle(cur) and deg[cur] == 2:
                prev, cur = cur, next(y for y in adj[cur] if y != prev)
                dist += 1
            if w.on_cycle(cur) or deg[cur] < 3 or deg[a] < deg[cur]:
                continue
            kind = MoveKind.TREE_SHIFT_ADJACENT if dist == 1 else MoveKind.TREE_SHIFT_DISTANT
            out.append(MoveDescriptor(kind, (("u", a), ("v", cur))))

    for r in w.cycle:
        for c in sorted(adj[r] - w.cycle_set):
            prev, cur, dist = r, c, 1
            while deg[cur] == 2:
                prev, cur = cur, next(y for y in adj[cur] if y != prev)
                dist += 1
            if deg[cur] < 3:
                continue
            if any(deg[x] >= 3 for x in _side(g, cur, prev) - {cur}):
                continue
            kind = MoveKind.BRANCH_MIGRATE_NEAR if dist == 1 else MoveKind.BRANCH_MIGRATE_FAR
            out.append(MoveDescriptor(kind, (("u", r), ("v", cur))))

    if w.length >= 4:
        loaded = [r for r in w.cycle if w.trees[r] and _branches_are_paths(g, w, r)]
        for u, v in combinations(sorted(loaded), 2):
            for arc in _qualifying_arcs(g, w, u, v):
                length = len(arc) - 1
                kind = {1: MoveKind.CYCLE_SHORTEN_BY_ONE, 2: MoveKind.CYCLE_SHORTEN_BY_TWO}.get(
                    length, MoveKind.CYCLE_SHORTEN_LONG
                )
                out.append(MoveDescriptor(kind, (("u", u), ("v", v), ("via", arc[1]))))

    if w.length == 3 and all(_branches_are_paths(g, w, x) for x in w.cycle):
        for u, v in permutations(w.cycle, 2):
            third = next(x for x in w.cycle if x not in (u, v))
            if deg[v] >= 3 and deg[u] >= deg[v] >= deg[third]:
                out.append(MoveDescriptor(MoveKind.HUB_CONSOLIDATE, (("u", u), ("v", v), ("w", third))))

    for r in w.cycle:
        paths = _path_branches(g, w, r)
        for (pl, l), (pm, m) in permutations(paths, 2):
            if l >= 2 and m >= 2:
                if l >= 3:
                    out.append(MoveDescriptor(MoveKind.PATH_REBALANCE_EQUAL, (("pl", pl), ("pm", pm)), Sign.EQUAL))
                else:
                    out.append(MoveDescriptor(MoveKind.PATH_REBALANCE_STRICT, (("pl", pl), ("pm", pm))))

    out.sort(key=MoveDescriptor.sort_key)
    return out


def apply_move(g: Graph, move: MoveDescriptor) -> Graph:
    kind = move.kind
    if kind is MoveKind.TREE_SHIFT_ADJACENT:
        return tree_shift_adjacent(g, move["u"], move["v"])
    if kind is MoveKind.TREE_SHIFT_DISTANT:
        return tree_shift_distant(g, move["u"], move["v"])
    if kind in (MoveKind.BRANCH_MIGRATE_NEAR, MoveKind.BRANCH_MIGRATE_FAR):
        return branch_migrate(g, move["u"], move["v"])
    if kind in (MoveKind.CYCLE_SHORTEN_BY_ONE, MoveKind.CYCLE_SHORTEN_BY_TWO, MoveKind.CYCLE_SHORTEN_LONG):
        return cycle_shorten(g, move["u"], move["v"], via=move["via"])
    if kind is MoveKind.HUB_CONSOLIDATE:
        return hub_consolidate(g, move["u"], move["v"])
    return path_rebalance(g, move["pl"], move["pm"])[0]


# -- ascent ------------------------------------------------------------------------


def _designated(paths: list[tuple[int, int]]) -> int | None:
    if not paths:
        return None
    return min(paths, key=lambda p: (-p[1], p[0]))[0]


def potential(g: Graph) -> tuple[int, int, int, int]:
    """Lexicographic measure that every ascent step strictly lowers.

    ``(off-cycle vertices of degree >= 3, cycle length, cycle vertices with
    attachments, sum over non-designated path branches of max(len - 1, 0))``;
    the designated path at a cycle vertex is its longest one, lowest first
    vertex on ties.
    """
    w = _witness(g)
    deg = g.degrees
    branching = sum(1 for v in range(g.n) if not w.on_cycle(v) and deg[v] >= 3)
    loaded = sum(1 for r in w.cycle if w.trees[r])
    excess = 0
    for r in w.cycle:
        paths = _path_branches(g, w, r)
        keep = _designated(paths)
        excess += sum(max(length - 1, 0) for first, length in paths if first != keep)
    return (branching, w.length, loaded, excess)


def _ascent_allows(g: Graph, w: UnicyclicWitness, move: MoveDescriptor) -> bool:
    if move.kind not in PATH_KINDS:
        return True
    root = w.root_of[move["pm"]]
    keep = _designated(_path_branches(g, w, root))
    return move["pm"] == keep and move["pl"] != keep


@dataclass(frozen=True)
class AscentStep:
    index: int
    move: MoveDescriptor
    graph: Graph
    so_before: float
    so_after: float


@dataclass
class AscentTrace:
    initial: Graph
    steps: list[AscentStep] = field(default_factory=list)

    @property
    def final(self) -> Graph:
        return self.steps[-1].graph if self.steps else self.initial

    @property
    def reached_extremal(self) -> bool:
        return is_extremal_shape(self.final)


def ascend(g: Graph, max_steps: int | None = None) -> AscentTrace:
    """Apply the highest-priority admissible move until none is left."""
    w = _witness(g)
    if pendant_count(g) < 1:
        raise ValueError("ascent needs at least one pendant vertex (k >= 1)")
    limit = max_steps if max_steps is not None else 4 * g.n * g.n + 16
    trace = AscentTrace(initial=g)
    current, so = g, sombor_index(g)
    while True:
        chosen = next((mv for mv in find_moves(current) if _ascent_allows(current, w, mv)), None)
        if chosen is None:
            return trace
        if len(trace.steps) >= limit:
            raise RuntimeError(f"ascent exceeded {limit} steps")
        nxt = apply_move(current, chosen)
        so_next = sombor_index(nxt)
        trace.steps.append(AscentStep(len(trace.steps) + 1, chosen, nxt, so, so_next))
        current, so = nxt, so_next
        w = _witness(current)


def format_trace(trace: AscentTrace) -> str:
    """Tab-separated step records, then the final graph in edge-list form."""
    lines = ["# step\tmove\tanchors\tso_before\tso_after"]
    for step in trace.steps:
        lines.append(
            f"{step.index}\t{step.move.kind.tag}\t{step.move.describe_anchors()}"
            f"\t{step.so_before:.10g}\t{step.so_after:.10g}"
        )
    lines.append("# final graph")
    return "\n".join(lines) + "\n" + format_edge_list(trace.final)
