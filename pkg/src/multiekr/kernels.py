"""Kernel backend selection.

The hot loops (pairwise intersection tests, adjacency construction, exact
clique search) exist twice: a Cython extension (``multiekr._kernels_c``)
and a pure-Python fallback (``multiekr._kernels_py``). The compiled module
is preferred when importable; set ``MULTIEKR_PURE=1`` to force the fallback.
Both backends implement the same algorithms with the same branching order,
so sizes, witnesses and node counts are identical either way.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("MULTIEKR_PURE") == "1":
    _impl = _kernels_py
else:
    try:
        from . import _kernels_c as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

BACKEND: str = "compiled" if _impl is not _kernels_py else "python"

DEFAULT_NODE_BUDGET = _kernels_py.DEFAULT_NODE_BUDGET

intersection_size = _impl.intersection_size
all_pairs_at_least = _impl.all_pairs_at_least
all_pairs_at_least_in_region = _impl.all_pairs_at_least_in_region
compatible_with_all = _impl.compatible_with_all
max_t_clique = _impl.max_t_clique


def backend_name() -> str:
    """Which kernel backend is active: "compiled" or "python"."""
    return BACKEND
