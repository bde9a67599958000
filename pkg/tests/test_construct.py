"""Constructor: Minkowski content, reach tests, certified builds."""
import math

import numpy as np
import pytest
from scipy.spatial import ConvexHull

from cheegerkit.construct import (build_self_cheeger, outer_minkowski_content,
                                  reach_at_least)
from cheegerkit.errors import (DegenerateInnerSet, Disconnected,
                               NotSimplyConnected, ReachTooSmall)
from cheegerkit.geometry import Arc, Point, Segment
from cheegerkit.morphology import dilate, erode, symmetric_difference_area
from cheegerkit.regionset import RegionSet
from cheegerkit.shapes import disk, l_shape, polygon, square


def test_outer_minkowski_content_examples():
    assert outer_minkowski_content(RegionSet.from_region(square())) == pytest.approx(4.0)
    seg = RegionSet(curves=[[Segment(Point(0, 0), Point(2, 0))]])
    assert outer_minkowski_content(seg) == pytest.approx(4.0)
    assert outer_minkowski_content(RegionSet.from_region(disk(0.8))) == pytest.approx(
        2 * math.pi * 0.8, abs=1e-12)


def test_reach_examples():
    assert reach_at_least(RegionSet.from_region(square()), 100.0)
    assert not reach_at_least(RegionSet.from_region(l_shape()), 0.01)
    whisker = RegionSet(bodies=[disk().outer],
                        curves=[[Segment(Point(1, 0), Point(2, 0))]])
    assert not reach_at_least(whisker, 0.1)


def test_reach_double_projection_derivation():
    # points (a, (a^2-1)/2) slightly past the whisker base are equidistant
    # to the whisker foot and to the circle, so reach is below 0.1
    whisker_edge = Segment(Point(1, 0), Point(2, 0))
    circle = disk()
    for a in (1.02, 1.05, 1.08):
        p = Point(a, (a * a - 1) / 2)
        d_seg = whisker_edge.distance(p)
        d_circle = abs(math.hypot(p.x, p.y) - 1.0)
        assert d_seg == pytest.approx(d_circle, abs=1e-12)
        assert d_seg <= 0.1
        foot = whisker_edge.closest_point(p)
        on_circle = Point(p.x / math.hypot(p.x, p.y), p.y / math.hypot(p.x, p.y))
        assert foot.dist(on_circle) > 1.2 * d_seg  # genuinely two feet


def test_reach_monotone_in_R():
    rs = RegionSet(bodies=[disk(0.5, center=(0, 0)).outer,
                           disk(0.5, center=(2, 0)).outer])
    # bottleneck midpoint at distance 0.5 from both disks
    assert reach_at_least(rs, 0.3)
    assert not reach_at_least(rs, 0.6)
    assert not reach_at_least(rs, 0.9)


def test_build_disk():
    rep = build_self_cheeger(disk())
    assert rep.R == pytest.approx(1.0, abs=1e-12)
    assert rep.verdict.h == pytest.approx(1.0, abs=1e-9)
    assert rep.minimal
    assert rep.Omega.area() == pytest.approx(4 * math.pi, abs=1e-9)


def test_build_square():
    rep = build_self_cheeger(square())
    assert rep.R == pytest.approx(1.0 / math.sqrt(math.pi), abs=1e-12)
    assert rep.verdict.h == pytest.approx(math.sqrt(math.pi), abs=1e-9)
    assert rep.steiner_area_residual < 1e-9
    assert rep.steiner_perimeter_residual < 1e-9
    assert rep.Omega.area() == pytest.approx(2 + 4 / math.sqrt(math.pi), abs=1e-9)
    assert rep.Omega.perimeter() == pytest.approx(4 + 2 * math.sqrt(math.pi), abs=1e-9)
    assert rep.verdict.status == "MINIMAL_CHEEGER"


def test_build_errors():
    with pytest.raises(Disconnected):
        build_self_cheeger(RegionSet(bodies=[square().outer,
                                             square(origin=(5, 5)).outer]))
    with pytest.raises(ReachTooSmall):
        build_self_cheeger(l_shape())
    with pytest.raises(DegenerateInnerSet):
        build_self_cheeger(RegionSet(points=[Point(0, 0)]))
    loop = [Arc(Point(0, 0), 1.0, 0.0, math.pi, True),
            Arc(Point(0, 0), 1.0, math.pi, 2 * math.pi, True)]
    with pytest.raises((NotSimplyConnected, DegenerateInnerSet)):
        build_self_cheeger(RegionSet(curves=[loop]))


def test_build_roundtrip_opening_fixed_point():
    rng = np.random.default_rng(4)
    for _ in range(4):
        pts = rng.normal(size=(9, 2))
        hull = ConvexHull(pts)
        omega = polygon([tuple(pts[i]) for i in hull.vertices])
        rep = build_self_cheeger(omega)
        inner = erode(rep.Omega, rep.R)
        # the eroded set contains omega and dilates back to Omega
        inter = (inner.area() + omega.area()
                 - symmetric_difference_area(inner, omega)) / 2.0
        assert inter == pytest.approx(omega.area(), rel=1e-7)
        back = dilate(inner, rep.R)
        assert symmetric_difference_area(back, rep.Omega) <= 1e-7 * rep.Omega.area()


def test_build_scale_equivariance():
    base = polygon([(0, 0), (2, 0), (2.5, 1.2), (1, 2), (-0.5, 0.9)])
    rep0 = build_self_cheeger(base)
    for s in (0.5, 2.0):
        rep = build_self_cheeger(base.scaled(s))
        assert rep.R == pytest.approx(rep0.R * s, rel=1e-12)
        assert rep.verdict.h == pytest.approx(rep0.verdict.h / s, rel=1e-9)


def test_steiner_residuals_random_convex():
    rng = np.random.default_rng(9)
    for _ in range(6):
        pts = rng.normal(size=(10, 2)) * rng.uniform(0.5, 2.0)
        hull = ConvexHull(pts)
        omega = polygon([tuple(pts[i]) for i in hull.vertices])
        rep = build_self_cheeger(omega)
        assert rep.steiner_area_residual < 1e-7
        assert rep.steiner_perimeter_residual < 1e-7
