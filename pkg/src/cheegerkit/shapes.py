"""Primitive region builders used by fixtures and tests."""
from __future__ import annotations

import math

from .geometry import Arc, ArcPolygon, Point, Segment
from .region import Region
from .tolerances import DEFAULT_TOL, TolerancePolicy


def polygon(points: list[tuple[float, float]], tol: TolerancePolicy = DEFAULT_TOL) -> Region:
    pts = [Point(x, y) for x, y in points]
    edges = [Segment(a, b) for a, b in zip(pts, pts[1:] + pts[:1])]
    return Region(ArcPolygon(edges), tol)


def square(side: float = 1.0, origin: tuple[float, float] = (0.0, 0.0),
           tol: TolerancePolicy = DEFAULT_TOL) -> Region:
    x0, y0 = origin
    return polygon([(x0, y0), (x0 + side, y0), (x0 + side, y0 + side), (x0, y0 + side)], tol)


def rectangle(width: float, height: float, origin: tuple[float, float] = (0.0, 0.0),
              tol: TolerancePolicy = DEFAULT_TOL) -> Region:
    x0, y0 = origin
    return polygon([(x0, y0), (x0 + width, y0), (x0 + width, y0 + height), (x0, y0 + height)], tol)


def disk(radius: float = 1.0, center: tuple[float, float] = (0.0, 0.0),
         tol: TolerancePolicy = DEFAULT_TOL) -> Region:
    c = Point(*center)
    quarters = [Arc(c, radius, k * math.pi / 2.0, (k + 1) * math.pi / 2.0, True)
                for k in range(4)]
    return Region(ArcPolygon(quarters), tol)


def stadium(half_width: float = 1.0, length: float = 2.0,
            tol: TolerancePolicy = DEFAULT_TOL) -> Region:
    """Rectangle of the given straight length with semicircular caps."""
    a = length / 2.0
    w = half_width
    left = Point(-a, 0.0)
    right = Point(a, 0.0)
    edges = [
        Segment(Point(-a, -w), Point(a, -w)),
        Arc(right, w, -math.pi / 2.0, math.pi / 2.0, True),
        Segment(Point(a, w), Point(-a, w)),
        Arc(left, w, math.pi / 2.0, 3.0 * math.pi / 2.0, True),
    ]
    return Region(ArcPolygon(edges), tol)


def rounded_rectangle(width: float, height: float, fillet: float,
                      tol: TolerancePolicy = DEFAULT_TOL) -> Region:
    """Axis-aligned rectangle centered at the origin with quarter-circle corners."""
    if not (0.0 < fillet <= min(width, height) / 2.0):
        raise ValueError("fillet must lie in (0, min(width, height)/2]")
    hw, hh, r = width / 2.0, height / 2.0, fillet
    edges = []
    corners = [
        (Point(hw - r, -hh + r), -math.pi / 2.0),   # bottom right
        (Point(hw - r, hh - r), 0.0),               # top right
        (Point(-hw + r, hh - r), math.pi / 2.0),    # top left
        (Point(-hw + r, -hh + r), math.pi),         # bottom left
    ]
    straight_ends = [
        (Point(-hw + r, -hh), Point(hw - r, -hh)),
        (Point(hw, -hh + r), Point(hw, hh - r)),
        (Point(hw - r, hh), Point(-hw + r, hh)),
        (Point(-hw, hh - r), Point(-hw, -hh + r)),
    ]
    for (seg_a, seg_b), (c, a0) in zip(straight_ends, corners):
        if seg_a.dist(seg_b) > 0:
            edges.append(Segment(seg_a, seg_b))
        edges.append(Arc(c, r, a0, a0 + math.pi / 2.0, True))
    return Region(ArcPolygon(edges), tol)


def rounded_square(side: float, fillet: float, tol: TolerancePolicy = DEFAULT_TOL) -> Region:
    return rounded_rectangle(side, side, fillet, tol)


def l_shape(arm: float = 2.0, thickness: float = 1.0,
            tol: TolerancePolicy = DEFAULT_TOL) -> Region:
    """L-polygon with one reflex corner."""
    a, t = arm, thickness
    if not (0.0 < t < a):
        raise ValueError("need 0 < thickness < arm")
    return polygon([(0, 0), (a, 0), (a, t), (t, t), (t, a), (0, a)], tol)
