"""Decision procedures: rolling-disk tests, prescribed-curvature and
self-Cheeger verdicts, and maximal-minimizer extraction.

The rolling-disk property is never tested by estimating reach directly; the
executable form is its equivalence with "no necks of radius R" plus the
morphological opening identity. Failure of the criterion yields
NOT_DETERMINED, never a negative claim: the test is sufficient, not
necessary (except effectively for convex inputs, which is annotated).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

from .errors import (CertificateUnavailable, NeckObstruction, NoInscribedDisk,
                     PreconditionFailed)
from .medial import medial_axis
from .morphology import (closure_of_interior_equals, dilate, erode, no_necks,
                         open_region, symmetric_difference_area)
from .region import Region
from .regionset import RegionSet

MINIMIZER = "MINIMIZER"
UNIQUE_MINIMIZER = "UNIQUE_MINIMIZER"
NOT_APPLICABLE = "NOT_APPLICABLE"
NOT_DETERMINED = "NOT_DETERMINED"
SELF_CHEEGER = "SELF_CHEEGER"
MINIMAL_CHEEGER = "MINIMAL_CHEEGER"
ROUTE_STRICT = "STRICT"
ROUTE_INTERIOR_CLOSURE = "INTERIOR_CLOSURE"
ROUTE_NONE = "NONE"


@dataclass
class PMCVerdict:
    kappa: float
    R: float
    ratio: float
    status: str
    functional_value: float
    diagnostics: dict[str, Any] = field(default_factory=dict)

    def to_obj(self) -> dict[str, Any]:
        return {"kappa": self.kappa, "R": self.R, "ratio": self.ratio,
                "status": self.status, "functional_value": self.functional_value,
                "diagnostics": self.diagnostics}


@dataclass
class CheegerVerdict:
    R: float
    h: float | None
    status: str
    uniqueness_route: str
    convex_flag: bool
    diagnostics: dict[str, Any] = field(default_factory=dict)

    def to_obj(self) -> dict[str, Any]:
        return {"R": self.R, "h": self.h, "status": self.status,
                "uniqueness_route": self.uniqueness_route,
                "convex_flag": self.convex_flag, "diagnostics": self.diagnostics}


@dataclass
class MaximalMinimizerResult:
    minimizer: RegionSet
    unique: bool
    kappa: float
    R: float


def inradius(region: Region) -> float:
    """Largest inscribed-disk radius (maximum of the medial radius)."""
    return medial_axis(region).inradius


def rolling_disk(region: Region, R: float) -> tuple[bool, dict[str, Any]]:
    """Interior rolling disk property of radius R via no-necks + opening identity."""
    region.require_valid()
    if R <= 0.0:
        raise ValueError("rolling disk radius must be > 0")
    diagnostics: dict[str, Any] = {"R": R}
    try:
        necks_ok = no_necks(region, R)
    except NoInscribedDisk:
        necks_ok = False
        diagnostics["no_inscribed_disk"] = True
    diagnostics["no_necks"] = necks_ok
    if not necks_ok:
        diagnostics["opening_equal"] = False
        return False, diagnostics
    opened = open_region(region, R)
    sym = symmetric_difference_area(opened, region)
    rel = sym / region.area()
    diagnostics["symdiff_area"] = sym
    diagnostics["relative_symdiff"] = rel
    equal = rel <= region.tol.tau_set
    diagnostics["opening_equal"] = equal
    return necks_ok and equal, diagnostics


def strict_violation_witnesses(region: Region, R: float):
    """Rolling positions of radius R touching the boundary at antipodal points.

    A 1-d piece of the inner parallel set yields one witness per stretch
    (every center along a spine has antipodal contacts).
    """
    tol = region.tol
    ma = medial_axis(region, max_spacing=R / 8.0)
    return ma.strict_violations(R, tol.tau_radius, tol.tau_geom)


def strict_rolling_disk(region: Region, R: float) -> bool:
    """Strict variant: no rolling position touches the boundary antipodally."""
    ok, diagnostics = rolling_disk(region, R)
    if not ok:
        raise PreconditionFailed(
            f"rolling disk property fails at R={R}: {diagnostics}")
    inner = erode(region, R)
    if inner.curves:
        return False
    return not strict_violation_witnesses(region, R)


def check_prescribed_curvature(region: Region, kappa: float) -> PMCVerdict:
    """Minimality of the region for P(E) - kappa * |E| among its subsets.

    Uniqueness is asserted among subsets of positive measure: at the
    borderline functional value 0 the empty set is always a minimizer too.
    """
    region.require_valid()
    if kappa <= 0.0:
        raise ValueError("kappa must be > 0")
    area = region.area()
    perim = region.perimeter()
    R = 1.0 / kappa
    ratio = area / perim
    fval = perim - kappa * area
    diagnostics: dict[str, Any] = {}
    if R > ratio + region.tol.tau_geom:
        return PMCVerdict(kappa, R, ratio, NOT_APPLICABLE, fval,
                          {"reason": "R exceeds area/perimeter"})
    ok, diagnostics = rolling_disk(region, R)
    if not ok:
        diagnostics["reason"] = "rolling disk fails; criterion is silent"
        return PMCVerdict(kappa, R, ratio, NOT_DETERMINED, fval, diagnostics)
    inner = erode(region, R)
    strict = not inner.curves and not strict_violation_witnesses(region, R)
    closure = closure_of_interior_equals(inner)
    diagnostics["strict"] = strict
    diagnostics["closure_of_interior"] = closure
    status = UNIQUE_MINIMIZER if (strict or closure) else MINIMIZER
    return PMCVerdict(kappa, R, ratio, status, fval, diagnostics)


def check_self_cheeger(region: Region) -> CheegerVerdict:
    """Self-Cheeger verdict at the canonical radius R = area / perimeter."""
    region.require_valid()
    R = region.area() / region.perimeter()
    convex = region.is_convex()
    ok, diagnostics = rolling_disk(region, R)
    diagnostics["convex"] = convex
    if not ok:
        if convex:
            diagnostics["note"] = ("criterion fails and the region is convex: "
                                   "for convex regions the test is essentially "
                                   "necessary, so the region is not self-Cheeger")
        return CheegerVerdict(R, None, NOT_DETERMINED, ROUTE_NONE, convex,
                              diagnostics)
    inner = erode(region, R)
    strict = not inner.curves and not strict_violation_witnesses(region, R)
    closure = closure_of_interior_equals(inner)
    diagnostics["strict"] = strict
    diagnostics["closure_of_interior"] = closure
    if strict:
        route = ROUTE_STRICT
    elif closure:
        route = ROUTE_INTERIOR_CLOSURE
    else:
        route = ROUTE_NONE
    status = MINIMAL_CHEEGER if route != ROUTE_NONE else SELF_CHEEGER
    return CheegerVerdict(R, 1.0 / R, status, route, convex, diagnostics)


def maximal_minimizer(region: Region, kappa: float,
                      h_upper_bound: float | None = None) -> MaximalMinimizerResult:
    """Union of all minimizers of P(E) - kappa|E|: the reopened parallel set.

    The hypothesis kappa >= h cannot be decided exactly, so the checkable
    certificate kappa >= perimeter/area is required; callers holding an
    oracle-certified upper bound on h may pass it to relax the gate.
    """
    region.require_valid()
    if kappa <= 0.0:
        raise ValueError("kappa must be > 0")
    tau = region.tol.tau_geom
    bound = region.perimeter() / region.area()
    certified = kappa >= bound - tau
    if not certified and h_upper_bound is not None:
        certified = kappa >= h_upper_bound - tau
    if not certified:
        raise CertificateUnavailable(
            f"kappa={kappa} below the checkable bound perimeter/area={bound}; "
            "pass an oracle-certified upper bound on h to override")
    R = 1.0 / kappa
    try:
        if not no_necks(region, R):
            raise NeckObstruction(f"inner parallel set at {R} is disconnected")
    except NoInscribedDisk as exc:
        raise NeckObstruction(str(exc)) from exc
    inner = erode(region, R)
    unique = closure_of_interior_equals(inner)
    return MaximalMinimizerResult(dilate(inner, R), unique, kappa, R)
