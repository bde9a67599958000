"""Independent grid verification layer: rasterization, exact distance
transform, grid morphology, and a min-cut estimator of the Cheeger constant.

The estimator only ever reports intervals: the discrete world's bias is
resolution-dependent, so exact-layer verdicts are tested for containment in
[h_lo, h_hi], never for equality. Degenerate 1-d necks are invisible here,
which is exactly why the exact layer exists; component counts are only
trusted for feature sizes of several pixels.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .errors import InvalidRegion
from .geometry import Point
from .region import Region
from ._kernels import grid_min_cut, label_components, squared_edt
from ._kernels.maxflow import OFFSETS_4, OFFSETS_16

# deterministic sub-pixel origin jitter so pixel centers avoid the exact
# symmetry lines of the fixtures
_JITTER = (0.0012345678901, 0.0017320508076)


@dataclass
class BinaryGrid:
    pixel_size: float
    origin: Point
    bits: np.ndarray  # bool (H, W)

    @property
    def height(self) -> int:
        return self.bits.shape[0]

    @property
    def width(self) -> int:
        return self.bits.shape[1]

    def centers(self) -> np.ndarray:
        ys, xs = np.mgrid[0:self.height, 0:self.width]
        px = self.pixel_size
        pts = np.stack([self.origin.x + (xs + 0.5) * px,
                        self.origin.y + (ys + 0.5) * px], axis=-1)
        return pts.reshape(-1, 2)

    def occupied_area(self) -> float:
        return float(self.bits.sum()) * self.pixel_size ** 2


@dataclass
class DistGrid:
    pixel_size: float
    origin: Point
    dist: np.ndarray  # float64 (H, W), length units, 0 outside


@dataclass
class CheegerEstimate:
    h_lo: float
    h_hi: float
    resolution: int
    minimizer_pixels: np.ndarray
    diagnostics: dict[str, Any] = field(default_factory=dict)

    @property
    def h_mid(self) -> float:
        return 0.5 * (self.h_lo + self.h_hi)

    def to_obj(self) -> dict[str, Any]:
        return {"h_lo": self.h_lo, "h_hi": self.h_hi,
                "resolution": self.resolution, "diagnostics": self.diagnostics}


def rasterize(region: Region, resolution: int) -> BinaryGrid:
    """Occupancy grid: a pixel is set iff its center lies inside the region."""
    region.require_valid()
    if resolution < 16:
        raise ValueError("resolution must be >= 16")
    x0, y0, x1, y1 = region.bbox()
    extent = max(x1 - x0, y1 - y0)
    px = extent / (resolution - 4)
    origin = Point(x0 - (2.0 + _JITTER[0]) * px, y0 - (2.0 + _JITTER[1]) * px)
    w = int(math.ceil((x1 - origin.x) / px)) + 2
    h = int(math.ceil((y1 - origin.y) / px)) + 2
    grid = BinaryGrid(px, origin, np.zeros((h, w), np.bool_))
    grid.bits = region.contains_mask(grid.centers()).reshape(h, w)
    if grid.bits[0, :].any() or grid.bits[-1, :].any() or \
            grid.bits[:, 0].any() or grid.bits[:, -1].any():
        raise InvalidRegion("rasterization touched the grid border")
    return grid


def distance_transform(grid: BinaryGrid) -> DistGrid:
    """Exact Euclidean distance to the nearest unoccupied pixel center."""
    d2 = squared_edt(grid.bits)
    return DistGrid(grid.pixel_size, grid.origin,
                    np.sqrt(d2) * grid.pixel_size)


def grid_erode(dist: DistGrid, r: float) -> tuple[BinaryGrid, int]:
    """Pixels at distance >= r, with their 8-connectivity component count."""
    if r < 0.0:
        raise ValueError("erosion radius must be >= 0")
    mask = dist.dist >= r
    _, count = label_components(mask)
    return BinaryGrid(dist.pixel_size, dist.origin, mask), count


def crofton_weights(pixel_size: float, neighborhood: int = 16) -> tuple[np.ndarray, np.ndarray]:
    """Neighbor offsets and cut weights making cut length approximate
    Euclidean perimeter (Cauchy-Crofton, angular cell quadrature)."""
    if neighborhood == 4:
        offsets = OFFSETS_4
        # plain city-block weights: exposed for the brute-force cross-check
        weights = np.full(len(offsets), pixel_size, np.float64)
        return offsets, weights
    if neighborhood != 16:
        raise ValueError("neighborhood must be 4 or 16")
    offsets = OFFSETS_16
    angles = np.array([math.atan2(dy, dx) % math.pi for dy, dx in offsets])
    order = np.argsort(angles)
    sorted_ang = angles[order]
    gaps = np.empty(len(offsets))
    for i in range(len(offsets)):
        prev_a = sorted_ang[i - 1] if i > 0 else sorted_ang[-1] - math.pi
        next_a = sorted_ang[(i + 1) % len(offsets)] if i + 1 < len(offsets) \
            else sorted_ang[0] + math.pi
        gaps[i] = 0.5 * (next_a - prev_a)
    dphi = np.empty(len(offsets))
    dphi[order] = gaps
    norms = np.hypot(offsets[:, 0], offsets[:, 1])
    weights = pixel_size * dphi / (2.0 * norms)
    return offsets, weights


def cut_perimeter(bits: np.ndarray, subset: np.ndarray, pixel_size: float,
                  neighborhood: int = 16) -> float:
    """Discrete perimeter of subset relative to the full plane: cut pairs
    inside the grid plus crossings from subset to non-occupied cells."""
    offsets, weights = crofton_weights(pixel_size, neighborhood)
    H, W = bits.shape
    total = 0.0
    inside = subset & bits
    for (dy, dx), w in zip(offsets, weights):
        dy, dx = int(dy), int(dx)
        a = inside[max(0, -dy):H - max(0, dy), max(0, -dx):W - max(0, dx)]
        b = inside[max(0, dy):H - max(0, -dy), max(0, dx):W - max(0, -dx)]
        total += w * float((a != b).sum())
        # crossings leaving the grid strip entirely
        if dy > 0:
            total += w * float(inside[H - dy:, :].sum())
            total += w * float(inside[:dy, :].sum())
        if dx > 0:
            total += w * float(inside[:, W - dx:].sum())
            total += w * float(inside[:, :dx].sum())
        elif dx < 0:
            total += w * float(inside[:, :(-dx)].sum())
            total += w * float(inside[:, W + dx:].sum())
    return total


def discrete_functional(bits: np.ndarray, subset: np.ndarray, kappa: float,
                        pixel_size: float, neighborhood: int = 16) -> float:
    """P_discrete(subset) - kappa * |subset| with the solver's own weights."""
    inside = subset & bits
    area = float(inside.sum()) * pixel_size ** 2
    return cut_perimeter(bits, inside, pixel_size, neighborhood) - kappa * area


def pmc_minimize_grid(grid: BinaryGrid, kappa: float,
                      neighborhood: int = 16) -> tuple[np.ndarray, float]:
    """Global discrete minimizer of P(E) - kappa|E| over pixel subsets.

    One s-t min cut: terminal weight kappa * pixel_area per pixel, boundary
    weights from the Cauchy-Crofton stencil. Returns the maximal minimizer
    and the optimal value (always <= 0; strictly negative certifies that
    kappa exceeds the grid Cheeger constant).
    """
    if kappa <= 0.0:
        raise ValueError("kappa must be > 0")
    offsets, weights = crofton_weights(grid.pixel_size, neighborhood)
    bits = grid.bits
    a = grid.pixel_size ** 2
    n = float(bits.sum())
    excess = np.where(bits, kappa * a, 0.0)
    # sink arcs: crossing weights to non-occupied neighbors
    H, W = bits.shape
    cap_t = np.zeros((H, W), np.float64)
    for (dy, dx), w in zip(offsets, weights):
        for sy, sx in ((int(dy), int(dx)), (-int(dy), -int(dx))):
            out_nb = np.ones((H, W), np.bool_)
            y0, y1 = max(0, -sy), min(H, H - sy)
            x0, x1 = max(0, -sx), min(W, W - sx)
            out_nb[y0:y1, x0:x1] = ~bits[y0 + sy:y1 + sy, x0 + sx:x1 + sx]
            cap_t += np.where(bits & out_nb, w, 0.0)
    flow, side = grid_min_cut(bits, excess, cap_t, offsets, weights)
    value = flow - kappa * a * n
    return side, value


def cheeger_estimate(region: Region, resolution: int,
                     rel_width: float = 1e-3) -> CheegerEstimate:
    """Bracket of the Cheeger constant by bisection on the sign of min F_kappa.

    The bracket starts at the isoperimetric lower bound (scaled by a safety
    factor, an implementation choice) and at the discrete perimeter/area
    ratio, which certifies a strictly negative minimum. The returned
    interval is the bisection bracket widened by the calibrated
    discretization slack recorded in the diagnostics.
    """
    if resolution < 64:
        raise ValueError("resolution must be >= 64")
    grid = rasterize(region, resolution)
    bits = grid.bits
    a = grid.pixel_size ** 2
    area_g = float(bits.sum()) * a
    perim_g = cut_perimeter(bits, bits, grid.pixel_size)
    lo = 0.8 * 2.0 * math.sqrt(math.pi / area_g)
    hi = (perim_g / area_g) * (1.0 + 1e-4)
    lo = min(lo, hi * 0.5)
    tau = 1e-9 * perim_g
    best_side = None
    while hi - lo > rel_width * hi:
        mid = 0.5 * (lo + hi)
        side, value = pmc_minimize_grid(grid, mid)
        if value < -tau:
            hi = mid
            best_side = side
        else:
            lo = mid
    if best_side is None:
        best_side, _ = pmc_minimize_grid(grid, hi)
    slack_up, slack_down = _discretization_slack(grid.pixel_size, hi)
    return CheegerEstimate(lo - slack_down, hi + slack_up, resolution, best_side,
                           {"pixel_size": grid.pixel_size,
                            "grid_area": area_g, "grid_perimeter": perim_g,
                            "slack_up": slack_up, "slack_down": slack_down,
                            "bracket": [lo, hi],
                            "bracket_rule": "isoperimetric*0.8 .. P/A*(1+1e-4)"})


def _discretization_slack(pixel_size: float, h_est: float) -> tuple[float, float]:
    """(upward, downward) absolute slack around the grid bracket.

    The discrete minimizer exploits directions where the Crofton quadrature
    undermeasures length, so the grid constant is biased low; the relative
    bias scales like pixel_size / Cheeger radius. Prefactors are calibrated
    on the analytic disk/square/stadium fixtures (worst observed 1.41 at
    resolution 512, on the square).
    """
    return (1.9 * pixel_size * h_est * h_est,
            0.3 * pixel_size * h_est * h_est)


def write_pgm(path: str, bits: np.ndarray) -> None:
    """Binary PGM dump of a mask for debugging."""
    H, W = bits.shape
    data = np.where(bits[::-1, :], 255, 0).astype(np.uint8)
    with open(path, "wb") as f:
        f.write(f"P5\n{W} {H}\n255\n".encode())
        f.write(data.tobytes())
