"""Hot numeric kernels with a numba fast path and a pure-numpy fallback.

Backend selection: the CHEEGERKIT_BACKEND environment variable may be set to
"numba" or "numpy"; unset (or "auto") uses numba when it imports cleanly.
"""
from __future__ import annotations

import os

try:
    import numba  # noqa: F401
    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a hard dependency normally
    _HAVE_NUMBA = False


def backend() -> str:
    choice = os.environ.get("CHEEGERKIT_BACKEND", "auto").lower()
    if choice == "numpy":
        return "numpy"
    if choice == "numba":
        if not _HAVE_NUMBA:
            raise RuntimeError("CHEEGERKIT_BACKEND=numba but numba is unavailable")
        return "numba"
    return "numba" if _HAVE_NUMBA else "numpy"


from .edt import squared_edt  # noqa: E402
from .labels import label_components  # noqa: E402
from .maxflow import grid_min_cut  # noqa: E402

__all__ = ["backend", "squared_edt", "label_components", "grid_min_cut"]
