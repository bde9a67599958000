"""Exact-measure geometry kernel: validation, area, perimeter, membership."""
import math

import numpy as np
import pytest

from cheegerkit import ArcPolygon, Point, Region, Segment
from cheegerkit.shapes import disk, l_shape, polygon, rounded_square, square, stadium


def test_unit_square_valid():
    rep = square().validate()
    assert rep.ok and rep.closed and rep.simple and rep.ccw


def test_open_chain_invalid():
    r = polygon([(0, 0), (1, 0), (1, 1), (0, 0.5)])
    # drop the closing edge so the chain ends at (0, 0.5)
    r = Region(ArcPolygon(list(r.edges[:-1])))
    rep = r.validate()
    assert not rep.ok and not rep.closed


def test_figure_eight_invalid():
    r = polygon([(0, 0), (1, 1), (1, 0), (0, 1)])
    rep = r.validate()
    assert not rep.ok and not rep.simple


def test_clockwise_invalid():
    r = polygon([(0, 0), (0, 1), (1, 1), (1, 0)])
    rep = r.validate()
    assert not rep.ok and not rep.ccw


def test_unit_square_measures():
    s = square()
    assert s.area() == pytest.approx(1.0, abs=1e-12)
    assert s.perimeter() == pytest.approx(4.0, abs=1e-12)


def test_unit_disk_measures():
    d = disk()
    assert d.validate().ok
    assert d.area() == pytest.approx(math.pi, abs=1e-12)
    assert d.perimeter() == pytest.approx(2.0 * math.pi, abs=1e-12)


def test_stadium_measures():
    s = stadium(1.0, 2.0)
    assert s.validate().ok
    assert s.area() == pytest.approx(math.pi + 4.0, abs=1e-12)
    assert s.perimeter() == pytest.approx(4.0 + 2.0 * math.pi, abs=1e-12)


def test_rounded_square_measures():
    r = rounded_square(1.0, 0.25)
    assert r.validate().ok
    assert r.area() == pytest.approx(1.0 - (4.0 - math.pi) * 0.0625, abs=1e-12)
    assert r.perimeter() == pytest.approx(4.0 - 8 * 0.25 + 2 * math.pi * 0.25, abs=1e-12)


def test_contains_square():
    s = square()
    assert s.contains(Point(0.5, 0.5)) == "inside"
    assert s.contains(Point(1.0, 0.5)) == "boundary"
    assert s.contains(Point(2.0, 0.0)) == "outside"


def test_contains_disk():
    d = disk()
    assert d.contains(Point(0.0, 0.0)) == "inside"
    assert d.contains(Point(1.0, 0.0)) == "boundary"
    assert d.contains(Point(0.9999, 0.0)) == "inside"
    assert d.contains(Point(1.2, 0.0)) == "outside"


def test_boundary_distance():
    s = square()
    assert s.boundary_distance(Point(0.5, 0.5)) == pytest.approx(0.5, abs=1e-12)
    d = disk()
    assert d.boundary_distance(Point(0.0, 0.0)) == pytest.approx(1.0, abs=1e-12)
    assert d.boundary_distance(Point(2.0, 0.0)) == pytest.approx(-1.0, abs=1e-12)


def test_is_convex():
    assert square().is_convex()
    assert stadium().is_convex()
    assert disk().is_convex()
    assert not l_shape().is_convex()


def test_isoperimetric_inequality():
    rng = np.random.default_rng(7)
    shapes = [square(), disk(), stadium(), rounded_square(1.0, 0.2), l_shape()]
    for _ in range(10):
        pts = rng.normal(size=(8, 2))
        hull = _hull(pts)
        if len(hull) >= 3:
            shapes.append(polygon(hull))
    for r in shapes:
        p, a = r.perimeter(), r.area()
        assert p * p >= 4.0 * math.pi * a - 1e-9
    d = disk(1.7)
    assert d.perimeter() ** 2 == pytest.approx(4 * math.pi * d.area(), abs=1e-9)


def _hull(pts):
    from scipy.spatial import ConvexHull
    h = ConvexHull(pts)
    return [tuple(pts[i]) for i in h.vertices]


def test_rigid_motion_invariance():
    rng = np.random.default_rng(3)
    for r in [square(), disk(), stadium(), rounded_square(1.0, 0.3)]:
        a0, p0 = r.area(), r.perimeter()
        for _ in range(5):
            ang = rng.uniform(0, 2 * math.pi)
            dx, dy = rng.uniform(-10, 10, size=2)
            moved = r.rotated(ang).translated(dx, dy)
            assert moved.area() == pytest.approx(a0, abs=1e-9)
            assert moved.perimeter() == pytest.approx(p0, abs=1e-9)


def test_scaling_laws():
    for s in (0.5, 2.0, 3.0):
        for r in [square(), disk(), stadium()]:
            scaled = r.scaled(s)
            assert scaled.area() == pytest.approx(r.area() * s * s, rel=1e-12)
            assert scaled.perimeter() == pytest.approx(r.perimeter() * s, rel=1e-12)


def test_distance_contains_agree():
    rng = np.random.default_rng(11)
    for r in [square(), disk(), stadium(), l_shape()]:
        x0, y0, x1, y1 = r.bbox()
        pts = rng.uniform([x0 - 0.5, y0 - 0.5], [x1 + 0.5, y1 + 0.5], size=(200, 2))
        mask = r.contains_mask(pts)
        for (x, y), inside in zip(pts, mask):
            d = r.boundary_distance(Point(x, y))
            if abs(d) > 1e-7:
                assert (d > 0) == bool(inside)


def test_contains_mask_matches_scalar():
    r = stadium()
    rng = np.random.default_rng(5)
    pts = rng.uniform([-2.5, -1.5], [2.5, 1.5], size=(500, 2))
    mask = r.contains_mask(pts)
    for (x, y), m in zip(pts, mask):
        c = r.contains(Point(x, y))
        if c != "boundary":
            assert (c == "inside") == bool(m)
