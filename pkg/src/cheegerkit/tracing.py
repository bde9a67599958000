"""Offset-curve generation, mutual splitting, level-set trimming, stitching.

This is the shared engine behind exact erosion, dilation and opening: offset
every boundary element, split the candidates at all mutual contacts, keep the
pieces that lie on the target level set (with a normal probe to reject ridge
pieces where two offsets coincide back-to-back), then stitch kept pieces into
counterclockwise loops with a curvature-aware angular sweep at each vertex.
"""
from __future__ import annotations

import math

from .errors import NumericalDegeneracy
from .geometry import Arc, ArcPolygon, Edge, Point, Segment
from .intersect import edge_intersections, split_params

TOL_TURN = 1e-9


def _turn(t_in: Point, t_out: Point) -> float:
    return math.atan2(t_in.x * t_out.y - t_in.y * t_out.x,
                      t_in.x * t_out.x + t_in.y * t_out.y)


def _offset_edge(e: Edge, r: float, inward: bool, tol: float) -> Edge | None:
    if isinstance(e, Segment):
        t = e.tangent_at(0.5)
        if inward:
            nx, ny = -t.y, t.x
        else:
            nx, ny = t.y, -t.x
        return e.translated(r * nx, r * ny)
    grow = e.ccw != inward
    rad = e.radius + r if grow else e.radius - r
    if rad <= tol:
        return None
    return Arc(e.center, rad, e.from_angle, e.to_angle, e.ccw)


def loop_offset_pieces(edges: list[Edge] | tuple[Edge, ...], r: float,
                       inward: bool, tol: float,
                       treat_pi_as_convex: bool = True) -> list[Edge]:
    """Offset pieces of a closed ccw loop, with bridge arcs at vertices.

    Inward offsets bridge reflex vertices with clockwise arcs (erosion);
    outward offsets bridge convex vertices with fillets (dilation). A pi
    turn (cusp) is treated as convex, which is what flattened 1-d curves
    need for their end caps.
    """
    n = len(edges)
    pieces: list[Edge] = []
    for e in edges:
        off = _offset_edge(e, r, inward, tol)
        if off is not None and off.length() > tol:
            pieces.append(off)
    for i in range(n):
        e_in, e_out = edges[i], edges[(i + 1) % n]
        v = e_out.start
        t_in = e_in.tangent_at(1.0)
        t_out = e_out.tangent_at(0.0)
        turn = _turn(t_in, t_out)
        dot = t_in.x * t_out.x + t_in.y * t_out.y
        if treat_pi_as_convex and dot < 0.0 and abs(abs(turn) - math.pi) < 1e-6:
            turn = abs(turn)
        if inward and turn < -TOL_TURN:
            a0 = math.atan2(t_in.x, -t_in.y)    # angle of left normal of t_in
            a1 = math.atan2(t_out.x, -t_out.y)
            arc = Arc(v, r, a0, a1, False)
            if arc.length() > tol:
                pieces.append(arc)
        elif not inward and turn > TOL_TURN:
            a0 = math.atan2(-t_in.x, t_in.y)    # angle of right normal of t_in
            a1 = math.atan2(-t_out.x, t_out.y)
            arc = Arc(v, r, a0, a1, True)
            if arc.length() > tol:
                pieces.append(arc)
    return pieces


def curve_offset_pieces(chain: list[Edge], r: float, tol: float) -> list[Edge]:
    """Boundary pieces of the r-tube around an open 1-d chain (round caps)."""
    loop = list(chain) + [e.reversed() for e in reversed(chain)]
    return loop_offset_pieces(loop, r, inward=False, tol=tol)


def point_offset_pieces(p: Point, r: float) -> list[Edge]:
    return [Arc(p, r, 0.0, math.pi, True), Arc(p, r, math.pi, 2.0 * math.pi, True)]


def split_mutual(pieces: list[Edge], tol: float) -> list[Edge]:
    """Split every piece at its contacts with every other piece."""
    cuts: list[list[float]] = [[] for _ in pieces]
    for i in range(len(pieces)):
        for j in range(i + 1, len(pieces)):
            for h in edge_intersections(pieces[i], pieces[j], tol):
                cuts[i].append(h.t1)
                cuts[j].append(h.t2)
    out: list[Edge] = []
    for e, ts in zip(pieces, cuts):
        params = split_params(e, ts, tol)
        out.extend(e.split_at(params) if params else [e])
    return out


def keep_level_pieces(pieces: list[Edge], level_dist, r: float,
                      keep_tol: float, probe_eps: float,
                      grow_side: str = "left") -> list[Edge]:
    """Pieces whose midpoint lies on the r-level set of level_dist.

    The field must increase at unit rate toward grow_side of the piece:
    'left' for erosion (boundary distance grows into the eroded interior),
    'right' for dilation (distance to the input grows outward). The probe
    rejects ridge pieces where two offsets coincide back-to-back and the
    field falls off on both sides.
    """
    sign = 1.0 if grow_side == "left" else -1.0
    kept: list[Edge] = []
    for e in pieces:
        q = e.point_at(0.5)
        d = level_dist(q)
        if abs(d - r) > keep_tol:
            continue
        t = e.tangent_at(0.5)
        probe = Point(q.x - sign * probe_eps * t.y, q.y + sign * probe_eps * t.x)
        if level_dist(probe) - d >= 0.45 * probe_eps:
            kept.append(e)
    return kept


def stitch_loops(pieces: list[Edge], stitch_tol: float,
                 drop_area: float) -> list[ArcPolygon]:
    """Assemble oriented pieces into ccw loops.

    At shared vertices the next piece is the most clockwise outgoing one,
    with near-ties resolved by probe points a small arclength along each
    piece (this encodes curvature and handles tangential cusps).
    """
    pieces = [e for e in pieces if e.length() > stitch_tol]
    if not pieces:
        return []
    # cluster endpoints
    endpoints: list[Point] = []
    for e in pieces:
        endpoints.append(e.start)
        endpoints.append(e.end)
    cluster = _cluster_points(endpoints, stitch_tol)
    start_c = [cluster[2 * i] for i in range(len(pieces))]
    end_c = [cluster[2 * i + 1] for i in range(len(pieces))]
    reps: dict[int, Point] = {}
    for idx, c in enumerate(cluster):
        reps.setdefault(c, endpoints[idx])

    outgoing: dict[int, list[int]] = {}
    for i, c in enumerate(start_c):
        outgoing.setdefault(c, []).append(i)

    probe_len = max(stitch_tol * 50.0, 1e-5 * _diameter(pieces))

    def probe_angle(i: int, at_start: bool) -> float:
        e = pieces[i]
        L = e.length()
        t = min(0.5, probe_len / L)
        v = reps[start_c[i] if at_start else end_c[i]]
        q = e.point_at(t if at_start else 1.0 - t)
        return math.atan2(q.y - v.y, q.x - v.x)

    used = [False] * len(pieces)
    loops: list[ArcPolygon] = []
    for i0 in range(len(pieces)):
        if used[i0]:
            continue
        loop = [i0]
        used[i0] = True
        cur = i0
        for _ in range(len(pieces) + 1):
            c_end = end_c[cur]
            if c_end == start_c[i0] and len(loop) >= 1:
                # candidate closure: close only if continuing would restart i0
                pass
            cands = [j for j in outgoing.get(c_end, []) if not used[j] or j == i0]
            if not cands:
                raise NumericalDegeneracy("stitching found a dangling piece end")
            rev = probe_angle(cur, at_start=False)
            best, best_d = None, None
            for j in cands:
                d = (rev - probe_angle(j, at_start=True)) % (2.0 * math.pi)
                if d < 1e-12:
                    d += 2.0 * math.pi
                if best_d is None or d < best_d:
                    best, best_d = j, d
            if best == i0:
                break
            if used[best]:
                raise NumericalDegeneracy("stitching revisited a used piece")
            used[best] = True
            loop.append(best)
            cur = best
        else:
            raise NumericalDegeneracy("stitching did not close a loop")
        loops.append(ArcPolygon([pieces[k] for k in loop]))
    out: list[ArcPolygon] = []
    for lp in loops:
        a = lp.signed_area()
        if a < -drop_area:
            raise NumericalDegeneracy(
                "negative loop from tracing (hole); unsupported input")
        if a > drop_area:
            out.append(lp)
    return out


def _diameter(pieces: list[Edge]) -> float:
    boxes = [e.bbox() for e in pieces]
    return math.hypot(max(b[2] for b in boxes) - min(b[0] for b in boxes),
                      max(b[3] for b in boxes) - min(b[1] for b in boxes))


def _cluster_points(pts: list[Point], tol: float) -> list[int]:
    """Union-find clustering of points within tol, via a spatial hash."""
    n = len(pts)
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i: int, j: int) -> None:
        parent[find(i)] = find(j)

    cell = tol * 2.0
    buckets: dict[tuple[int, int], list[int]] = {}
    for i, p in enumerate(pts):
        buckets.setdefault((int(p.x // cell), int(p.y // cell)), []).append(i)
    for (bx, by), idxs in buckets.items():
        neigh = []
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                neigh.extend(buckets.get((bx + dx, by + dy), []))
        for i in idxs:
            for j in neigh:
                if j > i and pts[i].dist(pts[j]) <= tol:
                    union(i, j)
    return [find(i) for i in range(n)]
