"""Jordan domains bounded by arc-polygons: validation, membership, distance."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidRegion, NumericalDegeneracy
from .geometry import Arc, ArcPolygon, Edge, Point, Segment
from .intersect import edge_intersections
from .tolerances import DEFAULT_TOL, TolerancePolicy

# golden-angle sequence for ray-cast retry directions
_RAY_ANGLES = [0.5411 + k * 2.39996322972865332 for k in range(25)]


@dataclass
class ValidationReport:
    ok: bool
    closed: bool
    simple: bool
    ccw: bool
    issues: list[str] = field(default_factory=list)


class Region:
    """A Jordan domain: one counterclockwise simple chain, no holes."""

    def __init__(self, outer: ArcPolygon, tol: TolerancePolicy = DEFAULT_TOL):
        self.outer = outer
        self.tol = tol
        self._report: ValidationReport | None = None
        self._medial = None  # filled lazily by medial.medial_axis

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self.outer.edges

    def validate(self) -> ValidationReport:
        if self._report is None:
            self._report = _validate(self.outer, self.tol)
        return self._report

    def require_valid(self) -> None:
        rep = self.validate()
        if not rep.ok:
            raise InvalidRegion("; ".join(rep.issues))

    def area(self) -> float:
        self.require_valid()
        return self.outer.signed_area()

    def perimeter(self) -> float:
        self.require_valid()
        return self.outer.perimeter()

    def bbox(self) -> tuple[float, float, float, float]:
        return self.outer.bbox()

    def diameter(self) -> float:
        return self.outer.diameter()

    def contains(self, p: Point) -> str:
        """Classify a point as 'inside' | 'boundary' | 'outside'."""
        self.require_valid()
        d = min(e.distance(p) for e in self.edges)
        if d <= self.tol.tau_geom:
            return "boundary"
        return "inside" if _ray_parity(self.edges, p, self.tol.tau_geom) else "outside"

    def boundary_distance(self, p: Point) -> float:
        """Signed distance to the boundary: >0 inside, <0 outside, 0 on it."""
        self.require_valid()
        d = min(e.distance(p) for e in self.edges)
        if d <= self.tol.tau_geom:
            return 0.0
        return d if _ray_parity(self.edges, p, self.tol.tau_geom) else -d

    def unsigned_distance(self, p: Point) -> float:
        return min(e.distance(p) for e in self.edges)

    def contains_mask(self, pts: np.ndarray) -> np.ndarray:
        """Vectorized strict-interior test for an (N, 2) array of points."""
        self.require_valid()
        return _contains_mask(self.edges, pts, self.tol.tau_geom)

    def distance_many(self, pts: np.ndarray) -> np.ndarray:
        """Unsigned distances from each of (N, 2) points to the boundary chain."""
        return _distance_many(self.edges, pts)

    def is_convex(self) -> bool:
        self.require_valid()
        return _is_convex(self.outer, self.tol.tau_geom)

    def translated(self, dx: float, dy: float) -> "Region":
        return Region(self.outer.translated(dx, dy), self.tol)

    def rotated(self, ang: float, about: Point = Point(0.0, 0.0)) -> "Region":
        return Region(self.outer.rotated(ang, about), self.tol)

    def scaled(self, s: float, about: Point = Point(0.0, 0.0)) -> "Region":
        return Region(self.outer.scaled(s, about), self.tol)

    def __repr__(self) -> str:
        return f"Region({len(self.outer.edges)} edges)"


def _validate(chain: ArcPolygon, tol: TolerancePolicy) -> ValidationReport:
    issues: list[str] = []
    tau = tol.tau_geom
    for i, e in enumerate(chain.edges):
        if e.length() <= tau:
            issues.append(f"edge {i} degenerate (length {e.length():.3g})")
    gap = chain.max_gap()
    closed = gap <= tau
    if not closed:
        issues.append(f"chain not closed (max endpoint gap {gap:.3g})")
    area = chain.signed_area()
    ccw = area > 0.0
    if closed and not ccw:
        issues.append(f"orientation not counterclockwise (signed area {area:.3g})")
    simple = True
    n = len(chain.edges)
    if closed and n >= 1:
        for i in range(n):
            for j in range(i + 1, n):
                adjacent = (j == i + 1) or (i == 0 and j == n - 1)
                hits = edge_intersections(chain.edges[i], chain.edges[j], tau)
                for h in hits:
                    if adjacent:
                        shared = _shared_vertices(chain.edges[i], chain.edges[j], tau)
                        if any(h.point.dist(v) <= 10.0 * tau for v in shared):
                            continue
                    simple = False
                    issues.append(
                        f"edges {i} and {j} intersect at "
                        f"({h.point.x:.6g}, {h.point.y:.6g})")
                    break
                if not simple:
                    break
            if not simple:
                break
    ok = closed and simple and ccw and not issues
    return ValidationReport(ok=ok, closed=closed, simple=simple, ccw=ccw, issues=issues)


def _shared_vertices(e1: Edge, e2: Edge, tau: float) -> list[Point]:
    out = []
    for a in (e1.start, e1.end):
        for b in (e2.start, e2.end):
            if a.dist(b) <= tau:
                out.append(a)
    return out


def _ray_parity(edges: tuple[Edge, ...], p: Point, tau: float) -> bool:
    """Crossing parity of a ray from p, retried over directions until clean."""
    diam = math.hypot(*_bbox_extent(edges))
    eps = max(tau, 1e-12 * diam)
    for ang in _RAY_ANGLES:
        ux, uy = math.cos(ang), math.sin(ang)
        count = 0
        suspicious = False
        for e in edges:
            hits = _ray_edge_hits(e, p, ux, uy, eps)
            if hits is None:
                suspicious = True
                break
            count += hits
        if not suspicious:
            return count % 2 == 1
    raise NumericalDegeneracy("ray casting failed in all retry directions")


def _bbox_extent(edges) -> tuple[float, float]:
    boxes = [e.bbox() for e in edges]
    return (max(b[2] for b in boxes) - min(b[0] for b in boxes),
            max(b[3] for b in boxes) - min(b[1] for b in boxes))


def _ray_edge_hits(e: Edge, p: Point, ux: float, uy: float, eps: float) -> int | None:
    """Number of proper ray crossings, or None when the cast is unreliable."""
    if isinstance(e, Segment):
        dx, dy = e.end.x - e.start.x, e.end.y - e.start.y
        L = math.hypot(dx, dy)
        denom = ux * dy - uy * dx
        if abs(denom) <= 1e-12 * L:
            # parallel ray: unreliable only if the segment is close to the ray line
            rx, ry = e.start.x - p.x, e.start.y - p.y
            if abs(rx * uy - ry * ux) <= eps or \
               abs((e.end.x - p.x) * uy - (e.end.y - p.y) * ux) <= eps:
                return None
            return 0
        rx, ry = e.start.x - p.x, e.start.y - p.y
        s = (rx * dy - ry * dx) / denom          # along the ray
        t = (rx * uy - ry * ux) / denom          # along the segment
        if s <= 0.0:
            if s > -eps and -0.1 <= t <= 1.1:
                return None
            return 0
        if t < -eps / L or t > 1.0 + eps / L:
            return 0
        if t < eps / L or t > 1.0 - eps / L:
            return None  # endpoint graze
        return 1
    # arc
    fx, fy = p.x - e.center.x, p.y - e.center.y
    b = fx * ux + fy * uy
    c = fx * fx + fy * fy - e.radius * e.radius
    disc = b * b - c
    band = 2.0 * e.radius * eps

    def on_arc(qx: float, qy: float, pad: float = 0.0) -> bool:
        ang = math.atan2(qy - e.center.y, qx - e.center.x)
        t = e.param_of_angle(ang)
        return -pad <= t <= 1.0 + pad

    if disc < -band:
        return 0
    if disc <= band:
        s_t = -b
        if s_t <= -eps:
            return 0
        q = (p.x + s_t * ux, p.y + s_t * uy)
        return None if on_arc(*q, pad=eps / e.length()) else 0
    sq = math.sqrt(disc)
    count = 0
    for s in (-b - sq, -b + sq):
        qx, qy = p.x + s * ux, p.y + s * uy
        if s <= 0.0:
            # a root at/behind the start only matters if it grazes the arc
            if s > -eps and on_arc(qx, qy, pad=eps / e.length()):
                return None
            continue
        ang = math.atan2(qy - e.center.y, qx - e.center.x)
        t = e.param_of_angle(ang)
        eps_t = eps / e.length()
        if -eps_t < t < eps_t or 1.0 - eps_t < t < 1.0 + eps_t:
            return None  # endpoint graze
        if 0.0 <= t <= 1.0:
            count += 1
    return count


def _is_convex(chain: ArcPolygon, tau: float) -> bool:
    tol_turn = 1e-9
    edges = chain.edges
    n = len(edges)
    for e in edges:
        if isinstance(e, Arc) and not e.ccw:
            return False
    for i in range(n):
        t_in = edges[i].tangent_at(1.0)
        t_out = edges[(i + 1) % n].tangent_at(0.0)
        cross = t_in.x * t_out.y - t_in.y * t_out.x
        dot = t_in.x * t_out.x + t_in.y * t_out.y
        if cross < -tol_turn:
            return False
        if abs(cross) <= tol_turn and dot < 0.0:
            return False  # cusp
    return True


def reflex_vertex_ids(chain: ArcPolygon, tol_turn: float = 1e-9) -> list[int]:
    """Indices i such that the vertex between edge i and edge i+1 turns right."""
    edges = chain.edges
    n = len(edges)
    out = []
    for i in range(n):
        t_in = edges[i].tangent_at(1.0)
        t_out = edges[(i + 1) % n].tangent_at(0.0)
        cross = t_in.x * t_out.y - t_in.y * t_out.x
        dot = t_in.x * t_out.x + t_in.y * t_out.y
        if cross < -tol_turn or (abs(cross) <= tol_turn and dot < 0.0 and cross <= 0.0):
            out.append(i)
    return out


# ---------------------------------------------------------------------------
# vectorized membership / distance

def _contains_mask(edges: tuple[Edge, ...], pts: np.ndarray, tau: float) -> np.ndarray:
    pts = np.asarray(pts, dtype=float)
    x, y = pts[:, 0], pts[:, 1]
    count = np.zeros(len(pts), dtype=np.int64)
    suspicious = np.zeros(len(pts), dtype=bool)
    diam = math.hypot(*_bbox_extent(edges))
    eps = max(tau, 1e-12 * diam)
    for e in edges:
        if isinstance(e, Segment):
            py, qy = e.start.y, e.end.y
            px, qx = e.start.x, e.end.x
            straddle = (py > y) != (qy > y)
            denom = qy - py
            with np.errstate(divide="ignore", invalid="ignore"):
                xi = px + (y - py) * (qx - px) / denom
            hit = straddle & (xi > x)
            count += hit.astype(np.int64)
            near_end = (np.abs(y - py) <= eps) | (np.abs(y - qy) <= eps)
            on_line = np.abs(xi - x) <= eps
            suspicious |= (near_end & (np.minimum(px, qx) - eps <= x)) | \
                          (straddle & on_line)
        else:
            cy, cx, r = e.center.y, e.center.x, e.radius
            dy = y - cy
            inside_band = np.abs(dy) < r
            s = np.sqrt(np.maximum(r * r - dy * dy, 0.0))
            tangentish = (np.abs(np.abs(dy) - r) <= eps) & (x <= cx + r + eps)
            suspicious |= tangentish
            for sign in (-1.0, 1.0):
                xi = cx + sign * s
                cand = inside_band & (xi > x)
                if not cand.any():
                    continue
                ang = np.arctan2(dy, xi - cx)
                t = _param_of_angle_vec(e, ang)
                eps_t = eps / e.length()
                ok_t = (t >= 0.0) & (t <= 1.0)
                graze = ((np.abs(t) < eps_t) | (np.abs(t - 1.0) < eps_t))
                count += (cand & ok_t & ~graze).astype(np.int64)
                suspicious |= cand & graze
    result = (count % 2) == 1
    idx = np.nonzero(suspicious)[0]
    for i in idx:
        result[i] = _ray_parity(edges, Point(float(x[i]), float(y[i])), tau)
    return result


def _param_of_angle_vec(arc: Arc, ang: np.ndarray) -> np.ndarray:
    if arc.ccw:
        d = np.mod(ang - arc.from_angle, 2.0 * math.pi)
    else:
        d = np.mod(arc.from_angle - ang, 2.0 * math.pi)
    sweep = arc.sweep
    fold = d > sweep + (2.0 * math.pi - sweep) / 2.0
    d = np.where(fold, d - 2.0 * math.pi, d)
    return d / sweep


def _distance_many(edges: tuple[Edge, ...], pts: np.ndarray) -> np.ndarray:
    pts = np.asarray(pts, dtype=float)
    x, y = pts[:, 0], pts[:, 1]
    best = np.full(len(pts), np.inf)
    for e in edges:
        if isinstance(e, Segment):
            dx, dy = e.end.x - e.start.x, e.end.y - e.start.y
            L2 = dx * dx + dy * dy
            t = ((x - e.start.x) * dx + (y - e.start.y) * dy) / L2
            t = np.clip(t, 0.0, 1.0)
            d = np.hypot(x - (e.start.x + t * dx), y - (e.start.y + t * dy))
        else:
            vx, vy = x - e.center.x, y - e.center.y
            dc = np.hypot(vx, vy)
            ang = np.arctan2(vy, vx)
            t = _param_of_angle_vec(e, ang)
            on = (t >= 0.0) & (t <= 1.0)
            d_arc = np.abs(dc - e.radius)
            d_ends = np.minimum(np.hypot(x - e.start.x, y - e.start.y),
                                np.hypot(x - e.end.x, y - e.end.y))
            d = np.where(on, d_arc, d_ends)
            d = np.where(dc == 0.0, e.radius, d)
        np.minimum(best, d, out=best)
    return best
