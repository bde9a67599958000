"""Named fixture regions, including the tendril, bow-tie and twin-lobe shapes.

Parameters not determined by closed forms are solved here so the documented
verdicts hold exactly: tendril fixtures solve the half-angle that makes the
rolling radius equal area/perimeter, and the twin-lobe fixture solves its
rolling radius the same way on the assembled four-arc boundary.
"""
from __future__ import annotations

import math

from scipy.optimize import brentq

from .errors import BadFixtureParams
from .geometry import Arc, ArcPolygon, Point, Segment
from .region import Region
from .shapes import (disk, l_shape, polygon, rectangle, rounded_square, square,
                     stadium)
from .tolerances import DEFAULT_TOL, TolerancePolicy


def _tendril_half_angle(k: int) -> float:
    """Half-angle of each width-2R tendril junction on a unit face so that
    the assembled set has area/perimeter exactly equal to R = sin(theta)."""
    def g(theta: float) -> float:
        s, c = math.sin(theta), math.cos(theta)
        return (math.pi - k * theta + k * s * c - 2.0 * math.pi * s
                + 2.0 * k * theta * s - 0.5 * k * math.pi * s * s)

    theta_max = min(math.pi / 2.0, math.pi / k) - 1e-9
    lo, hi = 1e-9, theta_max
    if g(lo) <= 0.0 or g(hi) >= 0.0:
        raise BadFixtureParams(f"no valid tendril half-angle for k={k}")
    return brentq(g, lo, hi, xtol=1e-15, maxiter=200)


def tendril_region(k: int, nose_length: float,
                   tol: TolerancePolicy = DEFAULT_TOL) -> Region:
    """Unit face disk with k equally spaced tendrils of width exactly 2R."""
    if k < 1 or nose_length <= 0.0:
        raise BadFixtureParams("need k >= 1 and nose_length > 0")
    theta = _tendril_half_angle(k)
    R = math.sin(theta)
    xj = math.cos(theta)
    xc = xj + nose_length
    origin = Point(0.0, 0.0)
    base_bottom = Segment(Point(xj, -R), Point(xc, -R))
    base_cap = Arc(Point(xc, 0.0), R, -math.pi / 2.0, math.pi / 2.0, True)
    base_top = Segment(Point(xc, R), Point(xj, R))
    ordered = []
    for m in range(k):
        phi = 2.0 * math.pi * m / k
        ordered.append(base_bottom.rotated(phi))
        ordered.append(base_cap.rotated(phi))
        ordered.append(base_top.rotated(phi))
        ordered.append(Arc(origin, 1.0, phi + theta,
                           2.0 * math.pi * (m + 1) / k - theta, True))
    return Region(ArcPolygon(ordered), tol)


def pinocchio(nose_length: float = 3.0, tol: TolerancePolicy = DEFAULT_TOL) -> Region:
    return tendril_region(1, nose_length, tol)


def dumbo(nose_length: float = 3.0, tol: TolerancePolicy = DEFAULT_TOL) -> Region:
    return tendril_region(2, nose_length, tol)


def cloud(k: int = 3, nose_length: float = 2.0,
          tol: TolerancePolicy = DEFAULT_TOL) -> Region:
    return tendril_region(k, nose_length, tol)


def bowtie(neck_half_width: float = 0.25, width: float = 4.0, height: float = 2.0,
           tol: TolerancePolicy = DEFAULT_TOL) -> Region:
    """Hexagonal bow-tie whose neck is narrower than its rolling radius."""
    h, w_, hh = neck_half_width, width, height
    if not (0.0 < h < hh):
        raise BadFixtureParams("need 0 < neck_half_width < height")
    region = polygon([(-w_, -hh), (0.0, -h), (w_, -hh), (w_, hh), (0.0, h), (-w_, hh)],
                     tol)
    R = region.area() / region.perimeter()
    if R <= h:
        raise BadFixtureParams(
            f"neck_half_width={h} is not narrower than the rolling radius {R}")
    return region


def double_bubble(lobe_radius: float = 1.0, center_dist: float = 2.0,
                  tol: TolerancePolicy = DEFAULT_TOL) -> Region:
    """Two round lobes joined by a waist that pinches to a single point.

    The inner parallel set at the solved radius R is two tangent bodies, so
    the interior-closure route certifies uniqueness while one antipodal
    rolling position (at the pinch) defeats strictness.
    """
    a, c = lobe_radius, center_dist
    if not (0.0 < a < c):
        raise BadFixtureParams("need 0 < lobe_radius < center_dist")
    s = (c * c - a * a) / (2.0 * a)

    def build(R: float) -> Region:
        rb = a + R          # lobe boundary radius
        rd = s - R          # dimple (waist wall) radius
        if rd <= tol.tau_geom:
            raise BadFixtureParams("waist radius vanished; reduce R range")
        lam = rb / (a + s)  # junctions sit on the center lines (tangency)
        j_rt = Point(c - lam * c, lam * s)          # right lobe <-> top dimple
        j_rb = Point(c - lam * c, -lam * s)
        j_lt = Point(-c + lam * c, lam * s)
        j_lb = Point(-c + lam * c, -lam * s)
        cl, cr = Point(-c, 0.0), Point(c, 0.0)
        ct, cb = Point(0.0, s), Point(0.0, -s)

        def ang(p: Point, ctr: Point) -> float:
            return math.atan2(p.y - ctr.y, p.x - ctr.x)

        edges = [
            Arc(cl, rb, ang(j_lt, cl), ang(j_lb, cl), True),    # left lobe, ccw long way
            Arc(cb, rd, ang(j_lb, cb), ang(j_rb, cb), False),   # bottom waist wall
            Arc(cr, rb, ang(j_rb, cr), ang(j_rt, cr), True),    # right lobe
            Arc(ct, rd, ang(j_rt, ct), ang(j_lt, ct), False),   # top waist wall
        ]
        return Region(ArcPolygon(edges), tol)

    def f(R: float) -> float:
        reg = build(R)
        return reg.outer.signed_area() - R * reg.outer.perimeter()

    lo, hi = 1e-6 * s, s * (1.0 - 1e-6)
    if f(lo) <= 0.0 or f(hi) >= 0.0:
        raise BadFixtureParams("no rolling radius solves area = R * perimeter")
    R = brentq(f, lo, hi, xtol=1e-15, maxiter=200)
    region = build(R)
    region.require_valid()
    return region


_FIXTURES = {
    "disk": (disk, [1.0]),
    "square": (square, [1.0]),
    "rectangle": (rectangle, [2.0, 1.0]),
    "stadium": (stadium, [1.0, 2.0]),
    "rounded_square": (rounded_square, [1.0, 0.25]),
    "lshape": (l_shape, [2.0, 1.0]),
    "bowtie": (bowtie, [0.25]),
    "pinocchio": (pinocchio, [3.0]),
    "dumbo": (dumbo, [3.0]),
    "cloud": (cloud, [3, 2.0]),
    "double_bubble": (double_bubble, [1.0, 2.0]),
}


def fixture_names() -> list[str]:
    return sorted(_FIXTURES)


def fixture(name: str, params: list[float] | None = None,
            tol: TolerancePolicy = DEFAULT_TOL) -> Region:
    """Build a named fixture; params default to the documented values."""
    if name not in _FIXTURES:
        raise BadFixtureParams(f"unknown fixture {name!r}; know {fixture_names()}")
    builder, defaults = _FIXTURES[name]
    args = list(params) if params else list(defaults)
    if name == "cloud" and args:
        args[0] = int(args[0])
    try:
        region = builder(*args, tol=tol)
    except TypeError as exc:
        raise BadFixtureParams(f"bad parameters for {name}: {exc}") from exc
    rep = region.validate()
    if not rep.ok:
        raise BadFixtureParams(f"fixture {name} invalid: {rep.issues}")
    return region
