"""Exact squared Euclidean distance transform (two-pass lower envelope)."""
from __future__ import annotations

import numpy as np

from . import backend as _backend

_INF = 1e18

try:
    from numba import njit

    @njit(cache=True)
    def _edt_1d_numba(f: np.ndarray, d: np.ndarray, v: np.ndarray, z: np.ndarray) -> None:
        n = f.shape[0]
        k = 0
        v[0] = 0
        z[0] = -_INF
        z[1] = _INF
        for q in range(1, n):
            s = ((f[q] + q * q) - (f[v[k]] + v[k] * v[k])) / (2.0 * q - 2.0 * v[k])
            while s <= z[k]:
                k -= 1
                s = ((f[q] + q * q) - (f[v[k]] + v[k] * v[k])) / (2.0 * q - 2.0 * v[k])
            k += 1
            v[k] = q
            z[k] = s
            z[k + 1] = _INF
        k = 0
        for q in range(n):
            while z[k + 1] < q:
                k += 1
            dq = q - v[k]
            d[q] = dq * dq + f[v[k]]

    @njit(cache=True)
    def _edt_2d_numba(f: np.ndarray) -> np.ndarray:
        h, w = f.shape
        g = np.empty((h, w), np.float64)
        out = np.empty((h, w), np.float64)
        size = max(h, w)
        d = np.empty(size, np.float64)
        v = np.empty(size + 1, np.int64)
        z = np.empty(size + 2, np.float64)
        col = np.empty(h, np.float64)
        for x in range(w):
            for y in range(h):
                col[y] = f[y, x]
            _edt_1d_numba(col[:h], d[:h], v, z)
            for y in range(h):
                g[y, x] = d[y]
        row = np.empty(w, np.float64)
        for y in range(h):
            for x in range(w):
                row[x] = g[y, x]
            _edt_1d_numba(row[:w], d[:w], v, z)
            for x in range(w):
                out[y, x] = d[x]
        return out

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    _HAVE_NUMBA = False


def _min_conv_sq_numpy(f: np.ndarray) -> np.ndarray:
    """out[i, j] = min_k f[i, k] + (j - k)^2, chunked over rows."""
    rows, n = f.shape
    ks = np.arange(n, dtype=np.float64)
    sq = (ks[None, :] - ks[:, None]) ** 2  # (j, k)
    out = np.empty_like(f)
    chunk = max(1, int(4e6 // (n * n)) or 1)
    for r0 in range(0, rows, chunk):
        r1 = min(rows, r0 + chunk)
        # (rows, j, k) -> min over k
        out[r0:r1] = (f[r0:r1, None, :] + sq[None, :, :]).min(axis=2)
    return out


def _edt_2d_numpy(f: np.ndarray) -> np.ndarray:
    g = _min_conv_sq_numpy(f.T).T
    return _min_conv_sq_numpy(g)


def squared_edt(occupied: np.ndarray) -> np.ndarray:
    """Squared pixel distance from every pixel to the nearest empty pixel.

    Empty pixels get 0; fully occupied input would be all infinite (the
    caller guarantees an empty margin).
    """
    f = np.where(occupied, _INF, 0.0).astype(np.float64)
    if _backend() == "numba" and _HAVE_NUMBA:
        return _edt_2d_numba(f)
    return _edt_2d_numpy(f)
