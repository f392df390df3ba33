"""Backend selection for the hot kernels.

The compiled extension is used when it imports; otherwise the pure-Python
versions take over.  Set ``SOMBOR_UNICYCLIC_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os

from sombor_unicyclic import _kernels_py

if os.environ.get("SOMBOR_UNICYCLIC_PURE", "") not in ("", "0"):
    _compiled = None
else:
    try:
        from sombor_unicyclic import _kernels as _compiled
    except ImportError:
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"
COMPILED_MAX_ORDER = 11

_impl = _compiled if _compiled is not None else _kernels_py


def canonical_labeling(n: int, masks) -> tuple[int, list[int]]:
    if _compiled is not None and n <= COMPILED_MAX_ORDER:
        return _compiled.canonical_labeling(n, masks)
    return _kernels_py.canonical_labeling(n, masks)


sombor_sum = _impl.sombor_sum
extremal_edge_array = _impl.extremal_edge_array
