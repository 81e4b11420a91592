"""Select the compiled kernels when available, else the pure-Python ones.

Set ``TRI36_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

BACKEND = "python"
canonical_code = _kernels_py.canonical_code
canonical_coloring = _kernels_py.canonical_coloring
kempe_neighbors = _kernels_py.kempe_neighbors

if not os.environ.get("TRI36_PURE_PYTHON"):
    try:
        from . import _kernels  # type: ignore[attr-defined]
    except ImportError:
        pass
    else:
        BACKEND = "cython"
        canonical_code = _kernels.canonical_code
        canonical_coloring = _kernels.canonical_coloring
        kempe_neighbors = _kernels.kempe_neighbors

__all__ = ["BACKEND", "canonical_code", "canonical_coloring", "kempe_neighbors"]
