"""Edge intersection primitives: crossings, tangencies, overlaps."""
import math

import pytest

from cheegerkit.geometry import Arc, Point, Segment
from cheegerkit.intersect import edge_intersections

TOL = 1e-9


def test_seg_seg_cross():
    a = Segment(Point(0, 0), Point(2, 2))
    b = Segment(Point(0, 2), Point(2, 0))
    hits = edge_intersections(a, b, TOL)
    assert len(hits) == 1
    assert hits[0].point.dist(Point(1, 1)) < 1e-12


def test_seg_seg_miss():
    a = Segment(Point(0, 0), Point(1, 0))
    b = Segment(Point(0, 1), Point(1, 1))
    assert edge_intersections(a, b, TOL) == []


def test_seg_seg_collinear_overlap():
    a = Segment(Point(0, 0), Point(2, 0))
    b = Segment(Point(1, 0), Point(3, 0))
    hits = edge_intersections(a, b, TOL)
    assert any(h.overlap for h in hits)
    xs = sorted({round(h.point.x, 9) for h in hits})
    assert xs == [1.0, 2.0]


def test_seg_arc_secant():
    arc = Arc(Point(0, 0), 1.0, 0.0, math.pi, True)
    seg = Segment(Point(-2, 0.5), Point(2, 0.5))
    hits = edge_intersections(seg, arc, TOL)
    assert len(hits) == 2
    for h in hits:
        assert abs(h.point.dist(Point(0, 0)) - 1.0) < 1e-12


def test_seg_arc_tangent():
    arc = Arc(Point(0, 0), 1.0, 0.0, math.pi, True)
    seg = Segment(Point(-2, 1.0), Point(2, 1.0))
    hits = edge_intersections(seg, arc, TOL)
    assert len(hits) == 1
    assert hits[0].tangent
    assert hits[0].point.dist(Point(0, 1)) < 1e-6


def test_arc_arc_two_points():
    a = Arc(Point(0, 0), 1.0, -math.pi, math.pi - 1e-12, True)
    b = Arc(Point(1, 0), 1.0, -math.pi, math.pi - 1e-12, True)
    hits = edge_intersections(a, b, TOL)
    assert len(hits) == 2
    ys = sorted(h.point.y for h in hits)
    assert ys[0] == pytest.approx(-math.sqrt(3) / 2, abs=1e-12)
    assert ys[1] == pytest.approx(math.sqrt(3) / 2, abs=1e-12)


def test_arc_arc_external_tangency():
    a = Arc(Point(0, 0), 1.0, -1.5, 1.5, True)
    b = Arc(Point(3, 0), 2.0, math.pi - 1.5, math.pi + 1.5, True)
    hits = edge_intersections(a, b, TOL)
    assert len(hits) == 1
    assert hits[0].tangent
    assert hits[0].point.dist(Point(1, 0)) < 1e-12


def test_arc_arc_cocircular_overlap():
    a = Arc(Point(0, 0), 1.0, 0.0, math.pi, True)
    b = Arc(Point(0, 0), 1.0, math.pi / 2, 3 * math.pi / 2, True)
    hits = edge_intersections(a, b, TOL)
    assert any(h.overlap for h in hits)
    pts = {(round(h.point.x, 9), round(h.point.y, 9)) for h in hits}
    assert (0.0, 1.0) in pts
