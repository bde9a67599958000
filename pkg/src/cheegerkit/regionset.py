"""Possibly degenerate compact sets: 2-d bodies, 1-d curve pieces, 0-d points."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

from .geometry import ArcPolygon, Edge, Point
from .region import Region, _ray_parity
from .shapes_io import chain_from_obj, chain_to_obj
from .tolerances import DEFAULT_TOL, TolerancePolicy


@dataclass
class RegionSet:
    bodies: list[ArcPolygon] = field(default_factory=list)
    curves: list[list[Edge]] = field(default_factory=list)
    points: list[Point] = field(default_factory=list)
    tol: TolerancePolicy = DEFAULT_TOL

    @classmethod
    def from_region(cls, region: Region) -> "RegionSet":
        return cls([region.outer], [], [], region.tol)

    @classmethod
    def empty(cls, tol: TolerancePolicy = DEFAULT_TOL) -> "RegionSet":
        return cls([], [], [], tol)

    def is_empty(self) -> bool:
        return not (self.bodies or self.curves or self.points)

    def piece_count(self) -> int:
        return len(self.bodies) + len(self.curves) + len(self.points)

    def area(self) -> float:
        return sum(b.signed_area() for b in self.bodies)

    def curve_length(self) -> float:
        return sum(e.length() for ch in self.curves for e in ch)

    def bbox(self) -> tuple[float, float, float, float] | None:
        boxes = [b.bbox() for b in self.bodies]
        boxes += [e.bbox() for ch in self.curves for e in ch]
        boxes += [(p.x, p.y, p.x, p.y) for p in self.points]
        if not boxes:
            return None
        return (min(b[0] for b in boxes), min(b[1] for b in boxes),
                max(b[2] for b in boxes), max(b[3] for b in boxes))

    def diameter(self) -> float:
        bb = self.bbox()
        if bb is None:
            return 0.0
        return math.hypot(bb[2] - bb[0], bb[3] - bb[1])

    def body_contains(self, body: ArcPolygon, p: Point) -> bool:
        d = min(e.distance(p) for e in body.edges)
        if d <= self.tol.tau_geom:
            return True
        return _ray_parity(body.edges, p, self.tol.tau_geom)

    def distance(self, p: Point) -> float:
        """Distance from p to the set (zero inside a body)."""
        best = math.inf
        for b in self.bodies:
            d = min(e.distance(p) for e in b.edges)
            if d <= self.tol.tau_geom or _ray_parity(b.edges, p, self.tol.tau_geom):
                return 0.0
            best = min(best, d)
        for ch in self.curves:
            for e in ch:
                best = min(best, e.distance(p))
        for q in self.points:
            best = min(best, p.dist(q))
        return best

    def to_obj(self) -> dict[str, Any]:
        return {
            "bodies": [chain_to_obj(b.edges) for b in self.bodies],
            "curves": [chain_to_obj(ch) for ch in self.curves],
            "points": [[p.x, p.y] for p in self.points],
        }

    @classmethod
    def from_obj(cls, obj: dict[str, Any], tol: TolerancePolicy = DEFAULT_TOL) -> "RegionSet":
        bodies = [ArcPolygon(chain_from_obj(b)) for b in obj.get("bodies", [])]
        curves = [chain_from_obj(c) for c in obj.get("curves", [])]
        points = [Point(float(x), float(y)) for x, y in obj.get("points", [])]
        return cls(bodies, curves, points, tol)
