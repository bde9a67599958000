"""8-connectivity component labeling of boolean grids."""
from __future__ import annotations

import numpy as np

from . import backend as _backend

try:
    from numba import njit

    @njit(cache=True)
    def _label_numba(mask: np.ndarray) -> tuple[np.ndarray, int]:
        h, w = mask.shape
        labels = np.full((h, w), -1, np.int32)
        stack = np.empty(h * w, np.int64)
        count = 0
        for y0 in range(h):
            for x0 in range(w):
                if not mask[y0, x0] or labels[y0, x0] >= 0:
                    continue
                top = 0
                stack[0] = y0 * w + x0
                labels[y0, x0] = count
                while top >= 0:
                    idx = stack[top]
                    top -= 1
                    y, x = idx // w, idx % w
                    for dy in range(-1, 2):
                        for dx in range(-1, 2):
                            ny, nx = y + dy, x + dx
                            if 0 <= ny < h and 0 <= nx < w and \
                                    mask[ny, nx] and labels[ny, nx] < 0:
                                labels[ny, nx] = count
                                top += 1
                                stack[top] = ny * w + nx
                count += 1
        return labels, count

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    _HAVE_NUMBA = False


def _label_numpy(mask: np.ndarray) -> tuple[np.ndarray, int]:
    h, w = mask.shape
    labels = np.where(mask, np.arange(h * w, dtype=np.int64).reshape(h, w), -1)
    pad = np.full((h + 2, w + 2), np.iinfo(np.int64).max, np.int64)
    while True:
        pad[1:-1, 1:-1] = np.where(mask, labels, np.iinfo(np.int64).max)
        best = labels.copy()
        for dy in (-1, 0, 1):
            for dx in (-1, 0, 1):
                if dy == 0 and dx == 0:
                    continue
                nb = pad[1 + dy:h + 1 + dy, 1 + dx:w + 1 + dx]
                best = np.where(mask & (nb < best), nb, best)
        if np.array_equal(best, labels):
            break
        labels = best
    uniq = np.unique(labels[mask]) if mask.any() else np.empty(0, np.int64)
    remap = {int(u): i for i, u in enumerate(uniq)}
    out = np.full((h, w), -1, np.int32)
    for u, i in remap.items():
        out[labels == u] = i
    return out, len(uniq)


def label_components(mask: np.ndarray) -> tuple[np.ndarray, int]:
    """(labels, count): labels are 0..count-1 on the mask, -1 elsewhere."""
    mask = np.ascontiguousarray(mask, dtype=np.bool_)
    if not mask.any():
        return np.full(mask.shape, -1, np.int32), 0
    if _backend() == "numba" and _HAVE_NUMBA:
        return _label_numba(mask)
    return _label_numpy(mask)
