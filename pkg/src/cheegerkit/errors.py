"""Exception types raised by the exact layer and the constructor."""
from __future__ import annotations


class CheegerKitError(Exception):
    """Base class for all package errors."""


class InvalidRegion(CheegerKitError):
    """Operation called on a region that fails validation."""


class NumericalDegeneracy(CheegerKitError):
    """Geometry too degenerate for tolerance recovery (near-tangent sites,
    holes created by dilation, unresolvable stitching)."""


class NoInscribedDisk(CheegerKitError):
    """Requested inscribed radius exceeds the inradius."""


class PreconditionFailed(CheegerKitError):
    """Strictness queried for a radius at which the rolling disk property fails."""


class NeckObstruction(CheegerKitError):
    """No-necks hypothesis fails, maximal-minimizer extraction inapplicable."""


class CertificateUnavailable(CheegerKitError):
    """kappa below the checkable perimeter/area bound and no oracle override given."""


class DegenerateInnerSet(CheegerKitError):
    """Inner set has zero area, forcing construction radius zero."""


class ReachTooSmall(CheegerKitError):
    """Inner set reach does not exceed the construction radius."""


class NotSimplyConnected(CheegerKitError):
    """Inner set encloses a hole (closed 1-d loop or cyclic adjacency)."""


class Disconnected(CheegerKitError):
    """Inner set has more than one connected component."""


class BadFixtureParams(CheegerKitError):
    """Fixture parameters outside the documented range."""
