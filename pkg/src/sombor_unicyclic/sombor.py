"""Sombor index, the triangle-hub extremal graph and its closed form, and the
elementary inequality / monotonicity checkers the rewrite rules rely on."""

from __future__ import annotations

import math
from math import sqrt
from dataclasses import dataclass, field
from typing import NamedTuple

from sombor_unicyclic import kernels
from sombor_unicyclic.graph import Graph, unicyclic_witness

EQ_TOL = 1e-9
STRICT_TOL = 1e-12

SQRT5 = math.sqrt(5.0)
SQRT8 = math.sqrt(8.0)


class InvalidParams(ValueError):
    pass


class _ParamsFields(NamedTuple):
    N: int
    k: int


class ExtremalParams(_ParamsFields):
    """A class U(N, k): unicyclic graphs on ``N`` vertices with ``k`` pendants.

    Immutable and validated on construction.  A tuple subclass because it is
    built once per class in tight verification loops.
    """

    __slots__ = ()

    def __new__(cls, N: int, k: int) -> ExtremalParams:
        if k < 1 or N < k + 3:
            raise InvalidParams(f"invalid (N, k) = ({N}, {k}): need N >= k+3, k >= 1")
        return tuple.__new__(cls, (N, k))


def edge_contribution(du: int, dv: int) -> float:
    if du < 1 or dv < 1:
        raise ValueError(f"edge endpoint degrees must be >= 1, got ({du}, {dv})")
    return math.sqrt(du * du + dv * dv)


def sombor_index(g: Graph) -> float:
    return _sombor_sum(g._n, g._edges)


_sombor_sum = kernels.sombor_sum
_extremal_edge_array = kernels.extremal_edge_array


def build_extremal(p: ExtremalParams) -> Graph:
    """Triangle 0-1-2 with hub 2 carrying ``k-1`` pendant edges and one tail path
    of ``N-k-2`` edges.  Pendants are labelled ``3..k+1``, the tail ``k+2..N-1``.

    When ``N = k+3`` the tail is a single edge, i.e. ``k`` pendant edges at the hub.
    """
    N, k = p
    return Graph._trusted(N, _extremal_edge_array(N, k))


def closed_form_so(p: ExtremalParams) -> float:
    N, k = p
    hub2 = (k + 2) * (k + 2)
    if N >= k + 4:
        return (N - k - 3) * SQRT8 + (k - 1) * sqrt(hub2 + 1) + 3 * sqrt(hub2 + 4) + SQRT5
    return k * sqrt(hub2 + 1) + 2 * sqrt(hub2 + 4) + SQRT8


def is_extremal_shape(g: Graph) -> bool:
    """Structural test for the triangle-hub graph, valid at any size.

    True iff ``g`` is unicyclic with a triangle, every attachment hangs off one
    triangle vertex, every attachment is a path, and at most one path is longer
    than a single edge.
    """
    w = unicyclic_witness(g)
    if w is None or w.length != 3:
        return False
    loaded = [r for r in w.cycle if w.trees[r]]
    if len(loaded) != 1:
        return False
    deg = g.degrees
    long_paths = 0
    for branch in w.trees[loaded[0]]:
        if any(deg[v] > 2 for v in branch):
            return False
        if len(branch) > 1:
            long_paths += 1
    return long_paths <= 1


# -- elementary lemmas ---------------------------------------------------------


def f_value(x: float, a: int, b: int) -> float:
    """sqrt((x+a)^2 + b^2) - sqrt(x^2 + b^2), written without cancellation."""
    return (2 * a * x + a * a) / (math.sqrt((x + a) ** 2 + b * b) + math.sqrt(x * x + b * b))


def g_value(x: float, a: int, b: int) -> float:
    """sqrt(a^2 + x^2) - sqrt(b^2 + x^2), written without cancellation."""
    return (a * a - b * b) / (math.sqrt(a * a + x * x) + math.sqrt(b * b + x * x))


def check_f_monotone(a: int, b: int, x_max: int) -> bool:
    if a < 1 or b < 1 or x_max < 2:
        raise ValueError("need a, b >= 1 and x_max >= 2")
    prev = f_value(1, a, b)
    for x in range(2, x_max + 1):
        cur = f_value(x, a, b)
        if not cur - prev > STRICT_TOL:
            return False
        prev = cur
    return True


def check_g_monotone(a: int, b: int, x_max: int) -> bool:
    if not a > b >= 1:
        raise ValueError(f"need a > b >= 1, got a={a}, b={b}")
    if x_max < 2:
        raise ValueError("need x_max >= 2")
    prev = g_value(1, a, b)
    for x in range(2, x_max + 1):
        cur = g_value(x, a, b)
        if not prev - cur > STRICT_TOL:
            return False
        prev = cur
    return True


def ineq_cd_margin(c: int, d: int) -> float:
    """LHS - RHS of sqrt(c^2+4) + sqrt(d^2+4) >= sqrt(c^2+d^2) + sqrt(8)."""
    if c < 2 or d < 2:
        raise ValueError(f"need c, d >= 2, got ({c}, {d})")
    return math.sqrt(c * c + 4) + math.sqrt(d * d + 4) - math.sqrt(c * c + d * d) - SQRT8


def check_ineq_cd(c: int, d: int) -> bool:
    return ineq_cd_margin(c, d) >= -EQ_TOL


_MN_SIDES = {
    "a": lambda m, n: ((m + n) ** 2 + 4, (m + 1) ** 2 + (n + 1) ** 2),
    "b": lambda m, n: ((m + n + 2) ** 2 + 4, (m + 1) ** 2 + (n + 3) ** 2),
    "c": lambda m, n: ((m + n + 2) ** 2 + 4, (m + 2) ** 2 + (n + 2) ** 2),
}


def ineq_mn_margin(variant: str, m: int, n: int) -> float:
    """sqrt(lhs) - sqrt(rhs) for variant ``a``, ``b`` or ``c``."""
    if variant not in _MN_SIDES:
        raise ValueError(f"unknown variant {variant!r}; expected one of a, b, c")
    if m < 1 or n < 1:
        raise ValueError(f"need m, n >= 1, got ({m}, {n})")
    lhs, rhs = _MN_SIDES[variant](m, n)
    return math.sqrt(lhs) - math.sqrt(rhs)


def check_ineq_mn(variant: str, m: int, n: int) -> bool:
    return ineq_mn_margin(variant, m, n) >= -EQ_TOL


@dataclass
class SweepResult:
    name: str
    checked: int = 0
    counterexamples: list[tuple] = field(default_factory=list)
    equalities: list[tuple] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def sweep_ineq_cd(limit: int = 200) -> SweepResult:
    res = SweepResult("ineq_cd")
    for c in range(2, limit + 1):
        for d in range(2, limit + 1):
            res.checked += 1
            margin = ineq_cd_margin(c, d)
            if margin < -EQ_TOL:
                res.counterexamples.append((c, d))
            elif abs(margin) <= EQ_TOL:
                res.equalities.append((c, d))
    return res


def sweep_ineq_mn(variant: str, limit: int = 200) -> SweepResult:
    res = SweepResult(f"ineq_mn_{variant}")
    for m in range(1, limit + 1):
        for n in range(1, limit + 1):
            res.checked += 1
            margin = ineq_mn_margin(variant, m, n)
            if margin < -EQ_TOL:
                res.counterexamples.append((m, n))
            elif abs(margin) <= EQ_TOL:
                res.equalities.append((m, n))
    return res


def sweep_f_monotone(ab_max: int = 20, x_max: int = 200) -> SweepResult:
    res = SweepResult("f_monotone")
    for a in range(1, ab_max + 1):
        for b in range(1, ab_max + 1):
            res.checked += 1
            if not check_f_monotone(a, b, x_max):
                res.counterexamples.append((a, b))
    return res


def sweep_g_monotone(ab_max: int = 20, x_max: int = 200) -> SweepResult:
    res = SweepResult("g_monotone")
    for a in range(2, ab_max + 1):
        for b in range(1, a):
            res.checked += 1
            if not check_g_monotone(a, b, x_max):
                res.counterexamples.append((a, b))
    return res


def sweep_all(limit: int = 200, ab_max: int = 20) -> list[SweepResult]:
    return [
        sweep_ineq_cd(limit),
        *(sweep_ineq_mn(v, limit) for v in "abc"),
        sweep_f_monotone(ab_max, limit),
        sweep_g_monotone(ab_max, limit),
    ]
