"""Medial axis construction: topology, exact radii, strictness witnesses."""
import math

import pytest

from cheegerkit.geometry import Point
from cheegerkit.medial import medial_axis
from cheegerkit.shapes import disk, l_shape, rectangle, square, stadium


def test_disk_axis_is_center():
    ma = medial_axis(disk())
    assert len(ma.branches) == 0
    assert len(ma.nodes) == 1
    n = ma.nodes[0]
    assert math.hypot(*n.xy) < 1e-12
    assert n.rho == pytest.approx(1.0, abs=1e-12)
    assert ma.inradius == pytest.approx(1.0, abs=1e-12)


def test_square_axis_diagonals():
    ma = medial_axis(square())
    centers = [n for n in ma.nodes if n.rho > 0.4]
    assert len(centers) == 1
    assert centers[0].xy[0] == pytest.approx(0.5, abs=1e-12)
    assert centers[0].xy[1] == pytest.approx(0.5, abs=1e-12)
    assert centers[0].rho == pytest.approx(0.5, abs=1e-12)
    assert len(ma.branches) == 4
    # every branch runs along a diagonal toward a corner
    corners = [n for n in ma.nodes if n.kind == "corner"]
    assert len(corners) == 4
    assert ma.inradius == pytest.approx(0.5, abs=1e-12)


def test_rectangle_h_axis():
    ma = medial_axis(rectangle(2.0, 1.0))
    const = [b for b in ma.branches if b.const_rho is not None]
    assert len(const) == 1
    b = const[0]
    assert b.const_rho == pytest.approx(0.5, abs=1e-12)
    pa, pb = ma.nodes[b.a].xy, ma.nodes[b.b].xy
    assert math.hypot(pa[0] - pb[0], pa[1] - pb[1]) == pytest.approx(1.0, abs=1e-9)
    corner_branches = [b2 for b2 in ma.branches if b2.const_rho is None]
    assert len(corner_branches) == 4
    assert ma.inradius == pytest.approx(0.5, abs=1e-12)


def test_stadium_spine():
    ma = medial_axis(stadium())
    assert len(ma.branches) == 1
    b = ma.branches[0]
    assert b.const_rho == pytest.approx(1.0, abs=1e-12)
    ends = sorted([ma.nodes[b.a].xy[0], ma.nodes[b.b].xy[0]])
    assert ends[0] == pytest.approx(-1.0, abs=1e-12)
    assert ends[1] == pytest.approx(1.0, abs=1e-12)
    assert ma.inradius == pytest.approx(1.0, abs=1e-12)


def test_lshape_inradius():
    ma = medial_axis(l_shape(2.0, 1.0))
    assert ma.inradius == pytest.approx(2.0 - math.sqrt(2.0), abs=1e-9)


def test_node_equidistance_invariant():
    for region in [square(), rectangle(2, 1), stadium(), l_shape()]:
        ma = medial_axis(region)
        for n in ma.nodes:
            if n.rho <= 1e-9:
                continue
            d = region.unsigned_distance(Point(*n.xy))
            assert abs(d - n.rho) <= 1e-9


def test_level_counts():
    sq = medial_axis(square())
    assert sq.level_component_count(0.25, 1e-9) == 1
    assert sq.level_component_count(0.5, 1e-9) == 1
    assert sq.level_component_count(0.51, 1e-9) == 0


def test_strict_witnesses_stadium():
    ma = medial_axis(stadium())
    # the whole spine is antipodal at radius 1
    assert ma.strict_violations(1.0, 1e-9, 1e-9)
    # nothing rolls antipodally at smaller radii
    assert not ma.strict_violations(0.694, 1e-9, 1e-9)


def test_witness_path_vertices_deep_enough():
    ma = medial_axis(stadium())
    path = ma.witness_path(Point(-1, 0), Point(1, 0), 1.0, 1e-9)
    assert path is not None
    reg = stadium()
    for p in path:
        assert reg.boundary_distance(p) >= 1.0 - 1e-9
