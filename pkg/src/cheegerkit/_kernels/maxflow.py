"""Grid min-cut by push-relabel: FIFO+global-relabel (numba) or a
synchronous vectorized variant (numpy fallback).

The graph is implicit: occupied grid cells are nodes, each undirected
neighbor family carries one capacity, source arcs enter as initial excess
and sink arcs as per-node capacities. The returned cut side is the maximal
one (complement of the residual sink-reachable set).
"""
from __future__ import annotations

import numpy as np

from . import backend as _backend

try:
    from numba import njit

    @njit(cache=True)
    def _global_relabel(h, indptr, heads, cap, rev, cap_t, n_lim, queue):
        n = h.size
        for u in range(n):
            h[u] = n_lim
        qt = 0
        for u in range(n):
            if cap_t[u] > 0.0:
                h[u] = 1
                queue[qt] = u
                qt += 1
        qh = 0
        while qh < qt:
            u = queue[qh]
            qh += 1
            hu = h[u]
            for j in range(indptr[u], indptr[u + 1]):
                v = heads[j]
                # arc v -> u has residual cap[rev[j]]
                if cap[rev[j]] > 0.0 and h[v] > hu + 1:
                    h[v] = hu + 1
                    queue[qt] = v
                    qt += 1

    @njit(cache=True)
    def _pr_solve(indptr, heads, cap, rev, excess, cap_t, eps):
        n = indptr.size - 1
        n_lim = n + 2
        h = np.empty(n, np.int32)
        bfs_queue = np.empty(n, np.int64)
        _global_relabel(h, indptr, heads, cap, rev, cap_t, n_lim, bfs_queue)
        cur = indptr[:n].copy()
        ring = np.empty(n + 1, np.int64)
        inq = np.zeros(n, np.bool_)
        hcount = np.zeros(n_lim + 2, np.int64)
        for u in range(n):
            if h[u] < n_lim:
                hcount[h[u]] += 1
        qh, qt = 0, 0
        for u in range(n):
            if excess[u] > eps and h[u] < n_lim:
                inq[u] = True
                ring[qt % (n + 1)] = u
                qt += 1
        relabels = 0
        gr_freq = n // 2 + 1
        while qh < qt:
            u = ring[qh % (n + 1)]
            qh += 1
            inq[u] = False
            while excess[u] > eps and h[u] < n_lim:
                if h[u] == 1 and cap_t[u] > 0.0:
                    d = excess[u] if excess[u] < cap_t[u] else cap_t[u]
                    excess[u] -= d
                    cap_t[u] -= d
                    if excess[u] <= eps:
                        break
                advanced = False
                j = cur[u]
                while j < indptr[u + 1]:
                    v = heads[j]
                    if cap[j] > 0.0 and h[u] == h[v] + 1:
                        d = excess[u] if excess[u] < cap[j] else cap[j]
                        cap[j] -= d
                        cap[rev[j]] += d
                        excess[u] -= d
                        excess[v] += d
                        if not inq[v] and h[v] < n_lim and excess[v] > eps:
                            inq[v] = True
                            ring[qt % (n + 1)] = v
                            qt += 1
                        if excess[u] <= eps:
                            advanced = True
                            cur[u] = j
                            break
                    j += 1
                if advanced:
                    break
                if j >= indptr[u + 1]:
                    # relabel, with the gap heuristic
                    old = h[u]
                    minh = n_lim
                    if cap_t[u] > 0.0:
                        minh = 0
                    for jj in range(indptr[u], indptr[u + 1]):
                        if cap[jj] > 0.0 and h[heads[jj]] < minh:
                            minh = h[heads[jj]]
                    newh = minh + 1 if minh < n_lim else n_lim
                    hcount[old] -= 1
                    h[u] = newh
                    if newh < n_lim:
                        hcount[newh] += 1
                    cur[u] = indptr[u]
                    relabels += 1
                    if hcount[old] == 0 and old < n_lim:
                        # heights above the gap can never reach the sink
                        for w in range(n):
                            if old < h[w] < n_lim:
                                hcount[h[w]] -= 1
                                h[w] = n_lim
                    if relabels >= gr_freq:
                        relabels = 0
                        _global_relabel(h, indptr, heads, cap, rev, cap_t,
                                        n_lim, bfs_queue)
                        for lv in range(n_lim + 2):
                            hcount[lv] = 0
                        for w in range(n):
                            if h[w] < n_lim:
                                hcount[h[w]] += 1
                        qh, qt = 0, 0
                        for w in range(n):
                            inq[w] = False
                        for w in range(n):
                            if excess[w] > eps and h[w] < n_lim:
                                inq[w] = True
                                ring[qt % (n + 1)] = w
                                qt += 1
                        break
                else:
                    cur[u] = j
        _global_relabel(h, indptr, heads, cap, rev, cap_t, n_lim, bfs_queue)
        return h

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    _HAVE_NUMBA = False


def _build_csr(mask: np.ndarray, offsets: np.ndarray, weights: np.ndarray):
    H, W = mask.shape
    ids = np.full((H, W), -1, np.int64)
    n = int(mask.sum())
    ids[mask] = np.arange(n)
    src_parts, dst_parts, cap_parts = [], [], []
    rev_parts = []
    base = 0
    starts = []
    for (dy, dx), w in zip(offsets, weights):
        for sy, sx in ((int(dy), int(dx)), (-int(dy), -int(dx))):
            y0, y1 = max(0, -sy), min(H, H - sy)
            x0, x1 = max(0, -sx), min(W, W - sx)
            sub = mask[y0:y1, x0:x1] & mask[y0 + sy:y1 + sy, x0 + sx:x1 + sx]
            u = ids[y0:y1, x0:x1][sub]
            v = ids[y0 + sy:y1 + sy, x0 + sx:x1 + sx][sub]
            src_parts.append(u)
            dst_parts.append(v)
            cap_parts.append(np.full(u.size, w, np.float64))
            starts.append((base, u.size))
            base += u.size
    src = np.concatenate(src_parts) if src_parts else np.empty(0, np.int64)
    dst = np.concatenate(dst_parts) if dst_parts else np.empty(0, np.int64)
    cap = np.concatenate(cap_parts) if cap_parts else np.empty(0, np.float64)
    # arcs come in (+e, -e) blocks of equal length and matching cell order
    pair = np.empty(src.size, np.int64)
    for bi in range(0, len(starts), 2):
        (b0, l0), (b1, l1) = starts[bi], starts[bi + 1]
        assert l0 == l1
        pair[b0:b0 + l0] = np.arange(b1, b1 + l1)
        pair[b1:b1 + l1] = np.arange(b0, b0 + l0)
    order = np.argsort(src, kind="stable")
    inv = np.empty_like(order)
    inv[order] = np.arange(order.size)
    heads = dst[order]
    cap_s = cap[order]
    rev = inv[pair[order]]
    indptr = np.zeros(n + 1, np.int64)
    np.add.at(indptr, src + 1, 1)
    indptr = np.cumsum(indptr)
    return ids, indptr, heads, cap_s, rev


def _shift(arr: np.ndarray, dy: int, dx: int, fill):
    out = np.full_like(arr, fill)
    H, W = arr.shape
    y0, y1 = max(0, dy), min(H, H + dy)
    x0, x1 = max(0, dx), min(W, W + dx)
    out[y0:y1, x0:x1] = arr[y0 - dy:y1 - dy, x0 - dx:x1 - dx]
    return out


def _pr_numpy(mask, excess, cap_t, offsets, weights, eps):
    H, W = mask.shape
    n = int(mask.sum())
    n_lim = n + 2
    dirs = []
    caps = {}
    for (dy, dx), w in zip(offsets, weights):
        for sy, sx in ((int(dy), int(dx)), (-int(dy), -int(dx))):
            ok = mask & _shift(mask, -sy, -sx, False)
            caps[(sy, sx)] = np.where(ok, w, 0.0)
            dirs.append((sy, sx))

    def global_relabel():
        h = np.full((H, W), n_lim, np.int32)
        h[mask & (cap_t > 0)] = 1
        frontier = mask & (cap_t > 0)
        level = 1
        while frontier.any():
            nxt = np.zeros_like(frontier)
            for (sy, sx) in dirs:
                # v can reach u=(v+s) if cap[v->u] > 0; frontier holds u
                res_vu = caps[(sy, sx)]
                u_of_v = _shift(frontier, -sy, -sx, False)
                cand = mask & u_of_v & (res_vu > 0) & (h == n_lim)
                nxt |= cand
            h[nxt] = level + 1
            frontier = nxt
            level += 1
        return h

    h = global_relabel()
    rounds = 0
    while True:
        active = mask & (excess > eps) & (h < n_lim)
        if not active.any():
            break
        # sink pushes
        adm = active & (h == 1) & (cap_t > 0)
        if adm.any():
            amt = np.where(adm, np.minimum(excess, cap_t), 0.0)
            excess -= amt
            cap_t -= amt
        for (sy, sx) in dirs:
            active = mask & (excess > eps) & (h < n_lim)
            if not active.any():
                break
            nb_h = _shift(h, -sy, -sx, n_lim)
            adm = active & (caps[(sy, sx)] > 0) & (h == nb_h + 1)
            if not adm.any():
                continue
            amt = np.where(adm, np.minimum(excess, caps[(sy, sx)]), 0.0)
            excess -= amt
            caps[(sy, sx)] -= amt
            caps[(-sy, -sx)] += _shift(amt, sy, sx, 0.0)
            excess += _shift(amt, sy, sx, 0.0)
        # relabel nodes that remain active
        active = mask & (excess > eps) & (h < n_lim)
        if active.any():
            minh = np.full((H, W), n_lim, np.int32)
            minh[cap_t > 0] = 0
            for (sy, sx) in dirs:
                nb_h = _shift(h, -sy, -sx, n_lim)
                cand = np.where(caps[(sy, sx)] > 0, nb_h, n_lim)
                minh = np.minimum(minh, cand)
            newh = np.where(minh < n_lim, minh + 1, n_lim).astype(np.int32)
            grew = active & (newh > h)
            h[grew] = newh[grew]
        rounds += 1
        if rounds % 64 == 0:
            h = np.maximum(h, global_relabel())  # heights may only grow
    h = global_relabel()
    return h


# 16-neighborhood stencil: 8 undirected direction families
OFFSETS_16 = np.array([(0, 1), (1, 0), (1, 1), (1, -1),
                       (1, 2), (2, 1), (2, -1), (1, -2)], dtype=np.int64)
OFFSETS_4 = np.array([(0, 1), (1, 0)], dtype=np.int64)


def grid_min_cut(mask: np.ndarray, excess: np.ndarray, cap_t: np.ndarray,
                 offsets: np.ndarray, weights: np.ndarray):
    """Min cut of the implicit grid graph.

    Returns (flow_value, source_side_mask) with the maximal source side.
    excess and cap_t are consumed (pass copies to keep them).
    """
    mask = np.ascontiguousarray(mask, dtype=np.bool_)
    excess = np.ascontiguousarray(excess, dtype=np.float64)
    cap_t = np.ascontiguousarray(cap_t, dtype=np.float64)
    total_t0 = float(cap_t[mask].sum())
    scale = max(float(excess.max(initial=0.0)), float(weights.max(initial=0.0)))
    eps = 1e-13 * max(scale, 1e-30)
    if _backend() == "numba" and _HAVE_NUMBA:
        ids, indptr, heads, cap, rev = _build_csr(mask, offsets, weights)
        exc = excess[mask].astype(np.float64)
        ct = cap_t[mask].astype(np.float64)
        h = _pr_solve(indptr, heads, cap, rev, exc, ct, eps)
        n_lim = (indptr.size - 1) + 2
        flow = total_t0 - float(ct.sum())
        side = np.zeros(mask.shape, np.bool_)
        side[mask] = h >= n_lim
        return flow, side
    h = _pr_numpy(mask, excess, cap_t, offsets, weights, eps)
    n_lim = int(mask.sum()) + 2
    flow = total_t0 - float(cap_t[mask].sum())
    side = mask & (h >= n_lim)
    return flow, side
