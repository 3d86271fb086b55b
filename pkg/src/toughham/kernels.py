"""Backend selection for the search kernels.

The compiled extension is used when it imports; setting
``TOUGHHAM_PURE_PYTHON=1`` forces the pure-Python reference kernels.
"""

from __future__ import annotations

import os

from . import _pykernels

KERNEL_NAMES = (
    "count_components",
    "max_independent_set",
    "independent_k_subset",
    "toughness_search",
    "ham_backtrack",
    "ham_dp",
    "longest_cycle",
    "vertex_flow",
)


def _load_compiled():
    if os.environ.get("TOUGHHAM_PURE_PYTHON", "") not in ("", "0"):
        return None
    try:
        from . import _kernels
    except ImportError:
        return None
    return _kernels


_compiled = _load_compiled()
backend = _compiled if _compiled is not None else _pykernels
BACKEND: str = backend.BACKEND

count_components = backend.count_components
max_independent_set = backend.max_independent_set
independent_k_subset = backend.independent_k_subset
toughness_search = backend.toughness_search
ham_backtrack = backend.ham_backtrack
ham_dp = backend.ham_dp
longest_cycle = backend.longest_cycle
vertex_flow = backend.vertex_flow


def available_backends() -> dict:
    """Name -> module for every backend importable in this process."""
    found = {"python": _pykernels}
    try:
        from . import _kernels
    except ImportError:
        pass
    else:
        found["cython"] = _kernels
    return found
