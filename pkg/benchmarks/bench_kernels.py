"""Compiled vs pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 5]

Prints the best-of-``repeat`` time per call for each kernel and backend, and
checks that both backends return identical results on the benchmark inputs.
"""

from __future__ import annotations

import argparse
import random
import timeit

from sombor_unicyclic import _kernels_py
from sombor_unicyclic.enumeration import enumerate_unicyclic
from sombor_unicyclic.graph import Graph
from sombor_unicyclic.random_graphs import random_unicyclic

try:
    from sombor_unicyclic import _kernels as _compiled
except ImportError:
    _compiled = None


def _cases():
    rng = random.Random(7)
    unicyclic10 = [(g.n, g.masks) for g in enumerate_unicyclic(10)]
    dense11 = []
    for _ in range(200):
        g = Graph(11, [(i, j) for i in range(11) for j in range(i + 1, 11) if rng.random() < 0.5])
        dense11.append((g.n, g.masks))
    big = [random_unicyclic(1000, rng) for _ in range(20)]
    extremal = [(1000, k) for k in range(1, 998, 50)]
    return [
        ("canonical_labeling: 657 unicyclic, n=10", "canonical_labeling", unicyclic10),
        ("canonical_labeling: 200 G(11, 1/2)", "canonical_labeling", dense11),
        ("sombor_sum: 20 random unicyclic, n=1000", "sombor_sum", [(g.n, g.edge_array) for g in big]),
        ("extremal_edge_array: 20 x N=1000", "extremal_edge_array", extremal),
    ]


def _run(module, name, inputs):
    fn = getattr(module, name)
    return [fn(*args) for args in inputs]


def _same(a, b) -> bool:
    if isinstance(a, float):
        return abs(a - b) <= 1e-9
    if hasattr(a, "shape"):
        return a.shape == b.shape and bool((a == b).all())
    return a == b


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if _compiled is None:
        print("compiled extension not built; nothing to compare")
        return 1
    print(f"{'kernel':<44} {'python':>12} {'cython':>12} {'speedup':>9}  agree")
    for label, name, inputs in _cases():
        times = {}
        for backend, module in (("python", _kernels_py), ("cython", _compiled)):
            t = timeit.repeat(lambda: _run(module, name, inputs), number=1, repeat=args.repeat)
            times[backend] = min(t) / len(inputs)
        agree = all(_same(a, b) for a, b in zip(_run(_kernels_py, name, inputs), _run(_compiled, name, inputs)))
        print(
            f"{label:<44} {times['python'] * 1e6:>10.1f}us {times['cython'] * 1e6:>10.1f}us"
            f" {times['python'] / times['cython']:>8.1f}x  {'yes' if agree else 'NO'}"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
