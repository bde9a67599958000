"""Exact planar geometry for chains of line segments and circular arcs.

Areas and perimeters are closed-form (divergence theorem on segments plus
circular-sector terms on arcs); no polygonal approximation anywhere.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * math.pi


def norm_angle(a: float) -> float:
    """Map an angle to [0, 2*pi)."""
    a = math.fmod(a, TWO_PI)
    return a + TWO_PI if a < 0 else a


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError("point coordinates must be finite")

    def __iter__(self):
        yield self.x
        yield self.y

    def dist(self, other: "Point") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __mul__(self, s: float) -> "Point":
        return Point(self.x * s, self.y * s)

    __rmul__ = __mul__

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y], dtype=float)


def _rot(p: Point, ang: float, about: Point) -> Point:
    c, s = math.cos(ang), math.sin(ang)
    dx, dy = p.x - about.x, p.y - about.y
    return Point(about.x + c * dx - s * dy, about.y + s * dx + c * dy)


@dataclass(frozen=True)
class Segment:
    start: Point
    end: Point

    @property
    def is_arc(self) -> bool:
        return False

    def length(self) -> float:
        return self.start.dist(self.end)

    def green(self) -> float:
        # contribution to the contour integral of (x dy - y dx)
        return self.start.x * self.end.y - self.start.y * self.end.x

    def point_at(self, t: float) -> Point:
        return Point(
            self.start.x + t * (self.end.x - self.start.x),
            self.start.y + t * (self.end.y - self.start.y),
        )

    def tangent_at(self, t: float) -> Point:
        dx, dy = self.end.x - self.start.x, self.end.y - self.start.y
        n = math.hypot(dx, dy)
        return Point(dx / n, dy / n)

    def signed_curvature(self) -> float:
        return 0.0

    def reversed(self) -> "Segment":
        return Segment(self.end, self.start)

    def closest_param(self, p: Point) -> float:
        dx, dy = self.end.x - self.start.x, self.end.y - self.start.y
        L2 = dx * dx + dy * dy
        if L2 == 0.0:
            return 0.0
        t = ((p.x - self.start.x) * dx + (p.y - self.start.y) * dy) / L2
        return min(1.0, max(0.0, t))

    def closest_point(self, p: Point) -> Point:
        return self.point_at(self.closest_param(p))

    def distance(self, p: Point) -> float:
        return p.dist(self.closest_point(p))

    def split_at(self, params: list[float]) -> list["Segment"]:
        ts = sorted(set([0.0, 1.0] + [min(1.0, max(0.0, t)) for t in params]))
        pts = [self.point_at(t) for t in ts]
        return [Segment(a, b) for a, b in zip(pts[:-1], pts[1:]) if a.dist(b) > 0.0]

    def translated(self, dx: float, dy: float) -> "Segment":
        return Segment(Point(self.start.x + dx, self.start.y + dy),
                       Point(self.end.x + dx, self.end.y + dy))

    def rotated(self, ang: float, about: Point = Point(0.0, 0.0)) -> "Segment":
        return Segment(_rot(self.start, ang, about), _rot(self.end, ang, about))

    def scaled(self, s: float, about: Point = Point(0.0, 0.0)) -> "Segment":
        f = lambda p: Point(about.x + s * (p.x - about.x), about.y + s * (p.y - about.y))
        return Segment(f(self.start), f(self.end))

    def bbox(self) -> tuple[float, float, float, float]:
        return (min(self.start.x, self.end.x), min(self.start.y, self.end.y),
                max(self.start.x, self.end.x), max(self.start.y, self.end.y))


@dataclass(frozen=True)
class Arc:
    """Circular arc from from_angle to to_angle around center.

    The sweep runs counterclockwise when ccw is true, clockwise otherwise;
    its magnitude is ((to-from) mod 2*pi) measured in the sweep direction,
    so a full circle cannot be represented by a single arc.
    """

    center: Point
    radius: float
    from_angle: float
    to_angle: float
    ccw: bool

    def __post_init__(self) -> None:
        if not (self.radius > 0.0 and math.isfinite(self.radius)):
            raise ValueError("arc radius must be positive and finite")

    @property
    def is_arc(self) -> bool:
        return True

    @property
    def sweep(self) -> float:
        """Unsigned sweep magnitude in (0, 2*pi)."""
        if self.ccw:
            d = norm_angle(self.to_angle - self.from_angle)
        else:
            d = norm_angle(self.from_angle - self.to_angle)
        return d

    @property
    def signed_sweep(self) -> float:
        return self.sweep if self.ccw else -self.sweep

    def angle_at(self, t: float) -> float:
        return self.from_angle + t * self.signed_sweep

    def point_at_angle(self, ang: float) -> Point:
        return Point(self.center.x + self.radius * math.cos(ang),
                     self.center.y + self.radius * math.sin(ang))

    def point_at(self, t: float) -> Point:
        return self.point_at_angle(self.angle_at(t))

    @property
    def start(self) -> Point:
        return self.point_at_angle(self.from_angle)

    @property
    def end(self) -> Point:
        return self.point_at_angle(self.to_angle)

    def tangent_at(self, t: float) -> Point:
        a = self.angle_at(t)
        if self.ccw:
            return Point(-math.sin(a), math.cos(a))
        return Point(math.sin(a), -math.cos(a))

    def signed_curvature(self) -> float:
        return (1.0 if self.ccw else -1.0) / self.radius

    def length(self) -> float:
        return self.radius * self.sweep

    def green(self) -> float:
        a = self.from_angle
        b = self.from_angle + self.signed_sweep
        r, cx, cy = self.radius, self.center.x, self.center.y
        return r * (cx * (math.sin(b) - math.sin(a))
                    - cy * (math.cos(b) - math.cos(a))) + r * r * (b - a)

    def reversed(self) -> "Arc":
        return Arc(self.center, self.radius, self.to_angle, self.from_angle, not self.ccw)

    def param_of_angle(self, ang: float) -> float:
        """Sweep fraction of an angle, unclamped (may fall outside [0, 1])."""
        if self.ccw:
            d = norm_angle(ang - self.from_angle)
        else:
            d = norm_angle(self.from_angle - ang)
        # angles just behind the start wrap to ~2*pi; fold them to negatives
        if d > self.sweep + (TWO_PI - self.sweep) / 2.0:
            d -= TWO_PI
        return d / self.sweep

    def contains_angle(self, ang: float, tol_ang: float = 0.0) -> bool:
        t = self.param_of_angle(ang)
        slack = tol_ang / self.sweep if self.sweep > 0 else 0.0
        return -slack <= t <= 1.0 + slack

    def closest_param(self, p: Point) -> float:
        vx, vy = p.x - self.center.x, p.y - self.center.y
        if vx == 0.0 and vy == 0.0:
            return 0.0
        t = self.param_of_angle(math.atan2(vy, vx))
        if 0.0 <= t <= 1.0:
            return t
        return 0.0 if p.dist(self.start) <= p.dist(self.end) else 1.0

    def closest_point(self, p: Point) -> Point:
        vx, vy = p.x - self.center.x, p.y - self.center.y
        d = math.hypot(vx, vy)
        if d > 0.0:
            ang = math.atan2(vy, vx)
            if self.contains_angle(ang):
                return Point(self.center.x + self.radius * vx / d,
                             self.center.y + self.radius * vy / d)
        s, e = self.start, self.end
        return s if p.dist(s) <= p.dist(e) else e

    def distance(self, p: Point) -> float:
        vx, vy = p.x - self.center.x, p.y - self.center.y
        d = math.hypot(vx, vy)
        if d == 0.0:
            return self.radius
        if self.contains_angle(math.atan2(vy, vx)):
            return abs(d - self.radius)
        return min(p.dist(self.start), p.dist(self.end))

    def subarc(self, t0: float, t1: float) -> "Arc":
        a0 = self.angle_at(t0)
        a1 = self.angle_at(t1)
        return Arc(self.center, self.radius, a0, a1, self.ccw)

    def split_at(self, params: list[float]) -> list["Arc"]:
        ts = sorted(set([0.0, 1.0] + [min(1.0, max(0.0, t)) for t in params]))
        out = []
        for t0, t1 in zip(ts[:-1], ts[1:]):
            if (t1 - t0) * self.sweep * self.radius > 0.0:
                out.append(self.subarc(t0, t1))
        return out

    def translated(self, dx: float, dy: float) -> "Arc":
        return Arc(Point(self.center.x + dx, self.center.y + dy), self.radius,
                   self.from_angle, self.to_angle, self.ccw)

    def rotated(self, ang: float, about: Point = Point(0.0, 0.0)) -> "Arc":
        return Arc(_rot(self.center, ang, about), self.radius,
                   self.from_angle + ang, self.to_angle + ang, self.ccw)

    def scaled(self, s: float, about: Point = Point(0.0, 0.0)) -> "Arc":
        c = Point(about.x + s * (self.center.x - about.x),
                  about.y + s * (self.center.y - about.y))
        return Arc(c, self.radius * s, self.from_angle, self.to_angle, self.ccw)

    def bbox(self) -> tuple[float, float, float, float]:
        xs = [self.start.x, self.end.x]
        ys = [self.start.y, self.end.y]
        # quadrant extremes reached by the sweep
        for k, (dx, dy) in enumerate([(1, 0), (0, 1), (-1, 0), (0, -1)]):
            if self.contains_angle(k * math.pi / 2.0):
                xs.append(self.center.x + self.radius * dx)
                ys.append(self.center.y + self.radius * dy)
        return (min(xs), min(ys), max(xs), max(ys))


Edge = Segment | Arc


def edge_from_endpoints_arc(start: Point, end: Point, center: Point, radius: float,
                            ccw: bool) -> Arc:
    """Arc through given endpoints on the circle (center, radius)."""
    a0 = math.atan2(start.y - center.y, start.x - center.x)
    a1 = math.atan2(end.y - center.y, end.x - center.x)
    return Arc(center, radius, a0, a1, ccw)


class ArcPolygon:
    """Closed oriented chain of segments and arcs (counterclockwise when valid)."""

    def __init__(self, edges: list[Edge]):
        if not edges:
            raise ValueError("arc polygon needs at least one edge")
        self.edges: tuple[Edge, ...] = tuple(edges)

    def __len__(self) -> int:
        return len(self.edges)

    def vertices(self) -> list[Point]:
        return [e.start for e in self.edges]

    def signed_area(self) -> float:
        return 0.5 * sum(e.green() for e in self.edges)

    def perimeter(self) -> float:
        return sum(e.length() for e in self.edges)

    def max_gap(self) -> float:
        """Largest distance between consecutive endpoints (0 when closed)."""
        g = 0.0
        for a, b in zip(self.edges, self.edges[1:] + self.edges[:1]):
            g = max(g, a.end.dist(b.start))
        return g

    def bbox(self) -> tuple[float, float, float, float]:
        boxes = [e.bbox() for e in self.edges]
        return (min(b[0] for b in boxes), min(b[1] for b in boxes),
                max(b[2] for b in boxes), max(b[3] for b in boxes))

    def diameter(self) -> float:
        x0, y0, x1, y1 = self.bbox()
        return math.hypot(x1 - x0, y1 - y0)

    def reversed(self) -> "ArcPolygon":
        return ArcPolygon([e.reversed() for e in reversed(self.edges)])

    def translated(self, dx: float, dy: float) -> "ArcPolygon":
        return ArcPolygon([e.translated(dx, dy) for e in self.edges])

    def rotated(self, ang: float, about: Point = Point(0.0, 0.0)) -> "ArcPolygon":
        return ArcPolygon([e.rotated(ang, about) for e in self.edges])

    def scaled(self, s: float, about: Point = Point(0.0, 0.0)) -> "ArcPolygon":
        return ArcPolygon([e.scaled(s, about) for e in self.edges])

    def __repr__(self) -> str:
        return f"ArcPolygon({len(self.edges)} edges, area={self.signed_area():.6g})"
