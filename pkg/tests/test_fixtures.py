"""Fixture catalog: validity and documented verdict statuses."""
import math

import pytest

from cheegerkit import criterion as cr
from cheegerkit.errors import BadFixtureParams
from cheegerkit.fixtures import (bowtie, cloud, double_bubble, dumbo, fixture,
                                 fixture_names, pinocchio)
from cheegerkit.morphology import (closure_of_interior_equals,
                                   connected_components, dilate, erode,
                                   symmetric_difference_area)


def test_every_fixture_is_valid():
    for name in fixture_names():
        region = fixture(name)
        assert region.validate().ok, name


def test_unknown_fixture():
    with pytest.raises(BadFixtureParams):
        fixture("nosuch")


def test_fixture_params():
    d = fixture("disk", [1.0])
    assert d.area() == pytest.approx(math.pi, abs=1e-12)
    s = fixture("stadium", [1.0, 2.0])
    assert s.area() == pytest.approx(math.pi + 4, abs=1e-12)


def test_pinocchio_recipe():
    p = pinocchio(3.0)
    R = p.area() / p.perimeter()
    # nose width is exactly 2R: erosion at R leaves the body plus one spine
    inner = erode(p, R)
    assert len(inner.bodies) == 1
    assert len(inner.curves) == 1
    assert not inner.points
    v = cr.check_self_cheeger(p)
    assert v.status == cr.SELF_CHEEGER
    assert v.uniqueness_route == cr.ROUTE_NONE
    assert not v.diagnostics["strict"]
    back = dilate(inner, R)
    assert symmetric_difference_area(back, p) <= 1e-7 * p.area()
    # the spine joins the body: one path component
    assert connected_components(inner)[0] == 1


def test_pinocchio_nose_length_free():
    for L in (1.0, 5.0):
        p = pinocchio(L)
        v = cr.check_self_cheeger(p)
        assert v.status == cr.SELF_CHEEGER


def test_dumbo_two_spines():
    d = dumbo(2.0)
    v = cr.check_self_cheeger(d)
    assert v.status == cr.SELF_CHEEGER
    inner = erode(d, v.R)
    assert len(inner.curves) == 2


def test_cloud_three_tendrils():
    c = cloud(3, 1.5)
    v = cr.check_self_cheeger(c)
    assert v.status == cr.SELF_CHEEGER
    assert len(erode(c, v.R).curves) == 3


def test_bowtie_recipe():
    b = bowtie(0.25)
    R = b.area() / b.perimeter()
    assert R > 0.25
    v = cr.check_self_cheeger(b)
    assert v.status == cr.NOT_DETERMINED
    assert not v.convex_flag
    inner = erode(b, R)
    assert connected_components(inner)[0] == 2
    with pytest.raises(BadFixtureParams):
        bowtie(1.5)


def test_double_bubble_recipe():
    db = double_bubble(1.0, 2.0)
    v = cr.check_self_cheeger(db)
    assert v.status == cr.MINIMAL_CHEEGER
    assert v.uniqueness_route == cr.ROUTE_INTERIOR_CLOSURE
    assert not v.diagnostics["strict"]
    inner = erode(db, v.R)
    assert closure_of_interior_equals(inner)
    assert len(inner.bodies) == 2
    assert connected_components(inner)[0] == 1
