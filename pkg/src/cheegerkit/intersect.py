"""Pairwise intersections of segments and arcs, tangency- and overlap-aware.

Tangential contacts are first-class results here: exact tangencies are the
common case for offset curves, so they are detected inside a tolerance band
and snapped to the geometric tangency point instead of being dropped.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .geometry import Arc, Edge, Point, Segment


@dataclass(frozen=True)
class Hit:
    t1: float
    t2: float
    point: Point
    tangent: bool = False
    overlap: bool = False  # endpoint of a collinear/cocircular overlap stretch


def _cross(ax: float, ay: float, bx: float, by: float) -> float:
    return ax * by - ay * bx


def _seg_seg(e1: Segment, e2: Segment, tol: float) -> list[Hit]:
    p1, d1x, d1y = e1.start, e1.end.x - e1.start.x, e1.end.y - e1.start.y
    p2, d2x, d2y = e2.start, e2.end.x - e2.start.x, e2.end.y - e2.start.y
    L1 = math.hypot(d1x, d1y)
    L2 = math.hypot(d2x, d2y)
    if L1 == 0.0 or L2 == 0.0:
        return []
    denom = _cross(d1x, d1y, d2x, d2y)
    rx, ry = p2.x - p1.x, p2.y - p1.y
    if abs(denom) <= tol * max(L1, L2):
        # parallel: collinear overlap contributes its endpoints as hits
        if abs(_cross(rx, ry, d1x, d1y)) > tol * L1:
            return []
        hits = []
        for q, t2 in ((e2.start, 0.0), (e2.end, 1.0)):
            t1 = ((q.x - p1.x) * d1x + (q.y - p1.y) * d1y) / (L1 * L1)
            if -tol / L1 <= t1 <= 1.0 + tol / L1:
                hits.append(Hit(min(1.0, max(0.0, t1)), t2, q, overlap=True))
        for q, t1 in ((e1.start, 0.0), (e1.end, 1.0)):
            t2 = ((q.x - p2.x) * d2x + (q.y - p2.y) * d2y) / (L2 * L2)
            if -tol / L2 <= t2 <= 1.0 + tol / L2:
                hits.append(Hit(t1, min(1.0, max(0.0, t2)), q, overlap=True))
        return hits
    t1 = _cross(rx, ry, d2x, d2y) / denom
    t2 = _cross(rx, ry, d1x, d1y) / denom
    s1, s2 = tol / L1, tol / L2
    if -s1 <= t1 <= 1.0 + s1 and -s2 <= t2 <= 1.0 + s2:
        t1c = min(1.0, max(0.0, t1))
        t2c = min(1.0, max(0.0, t2))
        return [Hit(t1c, t2c, e1.point_at(t1c), tangent=False)]
    return []


def _seg_arc(seg: Segment, arc: Arc, tol: float) -> list[Hit]:
    dx, dy = seg.end.x - seg.start.x, seg.end.y - seg.start.y
    L = math.hypot(dx, dy)
    if L == 0.0:
        return []
    fx, fy = seg.start.x - arc.center.x, seg.start.y - arc.center.y
    a = L * L
    b = fx * dx + fy * dy
    c = fx * fx + fy * fy - arc.radius * arc.radius
    disc = b * b - a * c
    band = 2.0 * arc.radius * tol * a  # |line-center dist - r| <= tol
    if disc < -band:
        return []
    hits: list[Hit] = []
    if disc <= band:
        roots = [(-b / a, True)]
    else:
        sq = math.sqrt(disc)
        roots = [((-b - sq) / a, False), ((-b + sq) / a, False)]
    slack = tol / L
    tol_ang = tol / arc.radius
    for t, tang in roots:
        if not (-slack <= t <= 1.0 + slack):
            continue
        q = seg.point_at(min(1.0, max(0.0, t)))
        ang = math.atan2(q.y - arc.center.y, q.x - arc.center.x)
        if not arc.contains_angle(ang, tol_ang):
            continue
        t2 = min(1.0, max(0.0, arc.param_of_angle(ang)))
        hits.append(Hit(min(1.0, max(0.0, t)), t2, q, tangent=tang))
    return hits


def _arc_arc(a1: Arc, a2: Arc, tol: float) -> list[Hit]:
    cx, cy = a2.center.x - a1.center.x, a2.center.y - a1.center.y
    dd = math.hypot(cx, cy)
    r1, r2 = a1.radius, a2.radius
    if dd <= tol and abs(r1 - r2) <= tol:
        # cocircular: overlap endpoints
        hits = []
        for arc_a, arc_b, swap in ((a1, a2, False), (a2, a1, True)):
            for t_b in (0.0, 1.0):
                q = arc_b.point_at(t_b)
                ang = math.atan2(q.y - arc_a.center.y, q.x - arc_a.center.x)
                if arc_a.contains_angle(ang, tol / r1):
                    t_a = min(1.0, max(0.0, arc_a.param_of_angle(ang)))
                    if swap:
                        hits.append(Hit(t_b, t_a, q, overlap=True))
                    else:
                        hits.append(Hit(t_a, t_b, q, overlap=True))
        return hits
    if dd > r1 + r2 + tol or dd < abs(r1 - r2) - tol or dd == 0.0:
        return []
    ux, uy = cx / dd, cy / dd
    ext_tangent = abs(dd - (r1 + r2)) <= tol
    int_tangent = abs(dd - abs(r1 - r2)) <= tol
    pts: list[tuple[Point, bool]] = []
    if ext_tangent or int_tangent:
        s = 1.0 if (ext_tangent or r1 >= r2) else -1.0
        q = Point(a1.center.x + s * r1 * ux, a1.center.y + s * r1 * uy)
        pts.append((q, True))
    else:
        a = (dd * dd + r1 * r1 - r2 * r2) / (2.0 * dd)
        h2 = r1 * r1 - a * a
        if h2 < 0.0:
            h2 = 0.0
        h = math.sqrt(h2)
        foot = Point(a1.center.x + a * ux, a1.center.y + a * uy)
        if h <= tol:
            pts.append((foot, True))
        else:
            pts.append((Point(foot.x - h * uy, foot.y + h * ux), False))
            pts.append((Point(foot.x + h * uy, foot.y - h * ux), False))
    hits = []
    for q, tang in pts:
        ang1 = math.atan2(q.y - a1.center.y, q.x - a1.center.x)
        ang2 = math.atan2(q.y - a2.center.y, q.x - a2.center.x)
        if a1.contains_angle(ang1, tol / r1) and a2.contains_angle(ang2, tol / r2):
            t1 = min(1.0, max(0.0, a1.param_of_angle(ang1)))
            t2 = min(1.0, max(0.0, a2.param_of_angle(ang2)))
            hits.append(Hit(t1, t2, q, tangent=tang))
    return hits


def edge_intersections(e1: Edge, e2: Edge, tol: float) -> list[Hit]:
    """All contacts between two edges, tangencies and overlap endpoints included."""
    b1, b2 = e1.bbox(), e2.bbox()
    if (b1[2] + tol < b2[0] or b2[2] + tol < b1[0]
            or b1[3] + tol < b2[1] or b2[3] + tol < b1[1]):
        return []
    if isinstance(e1, Segment) and isinstance(e2, Segment):
        return _seg_seg(e1, e2, tol)
    if isinstance(e1, Segment):
        return [Hit(h.t1, h.t2, h.point, h.tangent, h.overlap)
                for h in _seg_arc(e1, e2, tol)]
    if isinstance(e2, Segment):
        return [Hit(h.t2, h.t1, h.point, h.tangent, h.overlap)
                for h in _seg_arc(e2, e1, tol)]
    return _arc_arc(e1, e2, tol)


def split_params(edge: Edge, hits_t: list[float], tol: float) -> list[float]:
    """Deduplicated interior split parameters, endpoints excluded."""
    if not edge.length():
        return []
    eps = tol / edge.length()
    out: list[float] = []
    for t in sorted(hits_t):
        if t <= eps or t >= 1.0 - eps:
            continue
        if out and t - out[-1] <= eps:
            continue
        out.append(t)
    return out
