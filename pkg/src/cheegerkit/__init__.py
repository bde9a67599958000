"""cheegerkit: rolling-disk certification of planar self-Cheeger sets."""
from __future__ import annotations

from .errors import (BadFixtureParams, CertificateUnavailable, CheegerKitError,
                     Disconnected, DegenerateInnerSet, InvalidRegion,
                     NeckObstruction, NoInscribedDisk, NotSimplyConnected,
                     NumericalDegeneracy, PreconditionFailed, ReachTooSmall)
from .geometry import Arc, ArcPolygon, Point, Segment
from .region import Region, ValidationReport
from .tolerances import DEFAULT_TOL, TolerancePolicy

__all__ = [
    "Arc", "ArcPolygon", "Point", "Segment", "Region", "ValidationReport",
    "TolerancePolicy", "DEFAULT_TOL",
    "CheegerKitError", "InvalidRegion", "NumericalDegeneracy", "NoInscribedDisk",
    "PreconditionFailed", "NeckObstruction", "CertificateUnavailable",
    "DegenerateInnerSet", "ReachTooSmall", "NotSimplyConnected", "Disconnected",
    "BadFixtureParams",
]

__version__ = "0.1.0"
