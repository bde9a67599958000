"""Decision procedures: rolling disk, strictness, PMC and Cheeger verdicts."""
import math

import numpy as np
import pytest

from cheegerkit import criterion as cr
from cheegerkit.errors import (CertificateUnavailable, NeckObstruction,
                               PreconditionFailed)
from cheegerkit.fixtures import bowtie, double_bubble, pinocchio
from cheegerkit.morphology import open_region, symmetric_difference_area
from cheegerkit.shapes import disk, square, stadium


def test_inradius_examples():
    assert cr.inradius(disk()) == pytest.approx(1.0, abs=1e-12)
    assert cr.inradius(square()) == pytest.approx(0.5, abs=1e-12)
    assert cr.inradius(stadium()) == pytest.approx(1.0, abs=1e-12)


def test_rolling_disk_examples():
    ok, _ = cr.rolling_disk(disk(), 0.5)
    assert ok
    ok, diag = cr.rolling_disk(square(), 0.25)
    assert not ok and diag["no_necks"] and not diag["opening_equal"]
    ok, _ = cr.rolling_disk(stadium(), 1.0)
    assert ok


def test_strict_rolling_disk_examples():
    assert cr.strict_rolling_disk(disk(), 0.5)
    assert not cr.strict_rolling_disk(stadium(), 1.0)
    with pytest.raises(PreconditionFailed):
        cr.strict_rolling_disk(square(), 0.25)


def test_pmc_examples():
    v = cr.check_prescribed_curvature(disk(), 4.0)
    assert v.status == cr.UNIQUE_MINIMIZER
    assert v.functional_value == pytest.approx(-2.0 * math.pi, abs=1e-12)
    v = cr.check_prescribed_curvature(disk(), 1.0)
    assert v.status == cr.NOT_APPLICABLE
    v = cr.check_prescribed_curvature(square(), 4.0)
    assert v.status == cr.NOT_DETERMINED


def test_pmc_functional_identity():
    rng = np.random.default_rng(3)
    for region in [disk(), square(), stadium()]:
        for _ in range(3):
            R = rng.uniform(0.1, 1.0)
            v = cr.check_prescribed_curvature(region, 1.0 / R)
            expect = region.perimeter() - region.area() / R
            assert v.functional_value == pytest.approx(expect, abs=1e-12)


def test_self_cheeger_examples():
    v = cr.check_self_cheeger(disk())
    assert v.status == cr.MINIMAL_CHEEGER
    assert v.h == pytest.approx(2.0, abs=1e-12)
    assert v.uniqueness_route == cr.ROUTE_STRICT
    v = cr.check_self_cheeger(square())
    assert v.status == cr.NOT_DETERMINED and v.convex_flag
    v = cr.check_self_cheeger(stadium())
    assert v.status == cr.MINIMAL_CHEEGER
    assert v.h == pytest.approx((2 * math.pi + 4) / (math.pi + 4), abs=1e-9)
    assert v.uniqueness_route == cr.ROUTE_STRICT
    # determined verdicts satisfy h * R = 1 exactly
    assert abs(v.h * v.R - 1.0) < 1e-12


def test_maximal_minimizer_examples():
    mm = cr.maximal_minimizer(square(), 4.0)
    assert mm.minimizer.area() == pytest.approx(0.25 + 0.5 + math.pi / 16, abs=1e-12)
    assert mm.unique
    mm = cr.maximal_minimizer(disk(), 2.0)
    assert mm.minimizer.area() == pytest.approx(math.pi, abs=1e-12)
    mm = cr.maximal_minimizer(disk(), 4.0)
    assert mm.minimizer.area() == pytest.approx(math.pi, abs=1e-12)


def test_maximal_minimizer_guards():
    with pytest.raises(CertificateUnavailable):
        cr.maximal_minimizer(square(), 2.0)
    # oracle-certified override opens the gate
    mm = cr.maximal_minimizer(square(), 3.9, h_upper_bound=3.8)
    assert mm.minimizer.area() > 0
    b = bowtie(0.25)
    with pytest.raises(NeckObstruction):
        cr.maximal_minimizer(b, b.perimeter() / b.area())


def test_maximal_minimizer_opening_fixed_point():
    mm = cr.maximal_minimizer(square(), 4.0)
    from cheegerkit.geometry import ArcPolygon
    from cheegerkit.region import Region
    reg = Region(ArcPolygon(list(mm.minimizer.bodies[0].edges)))
    reopened = open_region(reg, mm.R)
    assert symmetric_difference_area(reopened, mm.minimizer) <= 1e-7 * reg.area()


def test_monotone_strictness():
    # rolling disk at R implies strict rolling disk at every r < R
    cases = [(disk(), 1.0), (stadium(), 1.0)]
    cases.append((pinocchio(3.0), None))
    for region, R in cases:
        if R is None:
            R = region.area() / region.perimeter()
        assert cr.rolling_disk(region, R)[0]
        for f in (0.25, 0.6, 0.9):
            r = f * R
            assert cr.rolling_disk(region, r)[0]
            assert cr.strict_rolling_disk(region, r)


def test_double_bubble_phenomenon():
    db = double_bubble()
    R = db.area() / db.perimeter()
    assert cr.rolling_disk(db, R)[0]
    assert not cr.strict_rolling_disk(db, R)
    witnesses = cr.strict_violation_witnesses(db, R)
    assert len(witnesses) == 1
    z, rho, (p1, p2) = witnesses[0]
    assert math.hypot(z.x, z.y) < 1e-9
    assert rho == pytest.approx(R, abs=1e-9)
    # the two contacts are antipodal through the center
    assert math.hypot(p1.x + p2.x - 2 * z.x, p1.y + p2.y - 2 * z.y) < 1e-9
