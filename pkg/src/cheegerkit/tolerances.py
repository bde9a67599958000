"""Tolerance policy shared by the exact geometry layer."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class TolerancePolicy:
    """Numerical tolerances for chain closure, set equality and medial radii.

    tau_geom   absolute length tolerance: chain closure, endpoint snapping,
               degeneracy thresholds.
    tau_set    relative symmetric-difference area below which two sets are
               considered equal.
    tau_radius absolute tolerance on medial/inscribed radii equality.
    """

    tau_geom: float = 1e-9
    tau_set: float = 1e-7
    tau_radius: float = 1e-9

    def __post_init__(self) -> None:
        if self.tau_geom <= 0 or self.tau_set <= 0 or self.tau_radius <= 0:
            raise ValueError("tolerances must be strictly positive")


DEFAULT_TOL = TolerancePolicy()
