"""Exact disk morphology: erosion, dilation, opening, connectivity, set areas.

Erosion is medial-axis driven: boundary offsets are trimmed against the
distance level set, while stretches of the axis whose radius equals r
exactly are emitted as 1-d curve pieces and isolated radius maxima as 0-d
points. Dilation offsets every piece outward and re-trims into disjoint
bodies, so opening is the composition of the two.
"""
from __future__ import annotations

import math

from .errors import NoInscribedDisk
from .geometry import ArcPolygon, Edge, Point
from .medial import medial_axis
from .region import Region
from .regionset import RegionSet
from .tracing import (curve_offset_pieces, keep_level_pieces, loop_offset_pieces,
                      point_offset_pieces, split_mutual, stitch_loops)


def _keep_tol(diam: float, tau_geom: float) -> float:
    return max(100.0 * tau_geom, 1e-9 * max(1.0, diam))


def _probe_eps(diam: float, tau_geom: float) -> float:
    return max(1e-6 * max(1.0, diam), 1e3 * tau_geom)


def _stitch_tol(diam: float, tau_geom: float) -> float:
    return max(20.0 * tau_geom, 2e-9 * max(1.0, diam))


def erode(region: Region, r: float) -> RegionSet:
    """Inner parallel set {x : dist(x, boundary) >= r}, degenerate pieces included."""
    region.require_valid()
    if r < 0.0:
        raise ValueError("erosion radius must be >= 0")
    if r == 0.0:
        return RegionSet.from_region(region)
    tol = region.tol
    diam = region.diameter()
    ma = medial_axis(region, max_spacing=r / 8.0)
    if r > ma.inradius + tol.tau_radius:
        return RegionSet.empty(tol)

    pieces = loop_offset_pieces(region.edges, r, inward=True, tol=tol.tau_geom)
    pieces = split_mutual(pieces, tol.tau_geom)
    kept = keep_level_pieces(pieces, region.boundary_distance, r,
                             _keep_tol(diam, tol.tau_geom),
                             _probe_eps(diam, tol.tau_geom))
    stol = _stitch_tol(diam, tol.tau_geom)
    bodies = stitch_loops(kept, stol, drop_area=stol * diam)
    curve_edges, points = ma.degenerate_pieces(r, tol.tau_radius)
    curves = [[e] for e in curve_edges]
    return RegionSet(bodies, curves, points, tol)


def dilate(rs: RegionSet | Region, r: float) -> RegionSet:
    """Minkowski sum with the closed disk of radius r, re-trimmed and unioned."""
    if isinstance(rs, Region):
        rs = RegionSet.from_region(rs)
    if r < 0.0:
        raise ValueError("dilation radius must be >= 0")
    if r == 0.0 or rs.is_empty():
        return rs
    tol = rs.tol
    diam = max(rs.diameter(), 2.0 * r)
    pieces: list[Edge] = []
    for b in rs.bodies:
        pieces.extend(loop_offset_pieces(b.edges, r, inward=False, tol=tol.tau_geom))
    for ch in rs.curves:
        pieces.extend(curve_offset_pieces(ch, r, tol.tau_geom))
    for p in rs.points:
        pieces.extend(point_offset_pieces(p, r))
    pieces = split_mutual(pieces, tol.tau_geom)
    kept = keep_level_pieces(pieces, rs.distance, r,
                             _keep_tol(diam, tol.tau_geom),
                             _probe_eps(diam, tol.tau_geom), grow_side="right")
    stol = _stitch_tol(diam, tol.tau_geom)
    bodies = stitch_loops(kept, stol, drop_area=stol * diam)
    return RegionSet(bodies, [], [], tol)


def open_region(region: Region, r: float) -> RegionSet:
    """Morphological opening: erosion then dilation by the same disk."""
    return dilate(erode(region, r), r)


def adjacency_pairs(rs: RegionSet) -> list[tuple[int, int]]:
    """Touching piece pairs, pieces indexed bodies, then curves, then points."""
    ctol = max(100.0 * rs.tol.tau_geom, 1e-9 * max(1.0, rs.diameter()))
    nb = len(rs.bodies)
    nc = len(rs.curves)
    pairs: list[tuple[int, int]] = []

    def body_touch(bi: int, p: Point) -> bool:
        b = rs.bodies[bi]
        if min(e.distance(p) for e in b.edges) <= ctol:
            return True
        return rs.body_contains(b, p)

    for i in range(nb):
        for j in range(i + 1, nb):
            verts_i = [e.start for e in rs.bodies[i].edges]
            verts_j = [e.start for e in rs.bodies[j].edges]
            if any(body_touch(j, v) for v in verts_i) or \
                    any(body_touch(i, v) for v in verts_j):
                pairs.append((i, j))
    for ci, ch in enumerate(rs.curves):
        ends = [ch[0].start, ch[-1].end]
        for bi in range(nb):
            if any(body_touch(bi, p) for p in ends):
                pairs.append((nb + ci, bi))
        for cj in range(ci + 1, nc):
            other = [rs.curves[cj][0].start, rs.curves[cj][-1].end]
            if any(a.dist(b) <= ctol for a in ends for b in other):
                pairs.append((nb + ci, nb + cj))
    for pi, p in enumerate(rs.points):
        for bi in range(nb):
            if body_touch(bi, p):
                pairs.append((nb + nc + pi, bi))
        for ci, ch in enumerate(rs.curves):
            if min(e.distance(p) for e in ch) <= ctol:
                pairs.append((nb + nc + pi, nb + ci))
    return pairs


def connected_components(rs: RegionSet) -> tuple[int, list[int]]:
    """Path-connectivity of the union of all pieces.

    Returns the component count and a component id per piece, ordered
    bodies, then curves, then points.
    """
    n = rs.piece_count()
    if n == 0:
        return 0, []
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in adjacency_pairs(rs):
        parent[find(i)] = find(j)

    labels = [find(i) for i in range(n)]
    order: dict[int, int] = {}
    for lb in labels:
        order.setdefault(lb, len(order))
    return len(order), [order[lb] for lb in labels]


def no_necks(region: Region, r: float, witness_pair: tuple[Point, Point] | None = None):
    """True iff the inner parallel set at distance r is nonempty and connected.

    With a witness pair, also returns a polyline joining the two inscribed
    disk centers inside the parallel set (or None when disconnected).
    """
    region.require_valid()
    if r <= 0.0:
        raise ValueError("no-necks radius must be > 0")
    ma = medial_axis(region, max_spacing=r / 8.0)
    if r > ma.inradius + region.tol.tau_radius:
        raise NoInscribedDisk(
            f"radius {r} exceeds inradius {ma.inradius}")
    count = ma.level_component_count(r, region.tol.tau_radius)
    ok = count == 1
    if witness_pair is None:
        return ok
    witness = None
    if ok:
        witness = ma.witness_path(witness_pair[0], witness_pair[1], r,
                                  region.tol.tau_radius)
    return ok, witness


def closure_of_interior_equals(rs: RegionSet) -> bool:
    """True iff the set equals the closure of its interior (bodies only)."""
    return not rs.curves and not rs.points


def _split_against(edges_a, edges_b, tau: float) -> list[Edge]:
    from .intersect import edge_intersections, split_params
    out: list[Edge] = []
    for e in edges_a:
        ts = []
        for f in edges_b:
            ts.extend(h.t1 for h in edge_intersections(e, f, tau))
        params = split_params(e, ts, tau)
        out.extend(e.split_at(params) if params else [e])
    return out


def _pair_intersection_area(pa: ArcPolygon, pb: ArcPolygon, tau: float,
                            diam: float) -> float:
    """Green's-theorem area of the intersection of two ccw bodies.

    Kept boundary pieces need no stitching: pieces of one boundary strictly
    inside the other count fully, shared boundary stretches count half from
    each side (which cancels exactly on oppositely oriented overlaps).
    """
    from .region import _ray_parity
    ctol = max(10.0 * tau, 1e-9 * max(1.0, diam))
    total = 0.0
    for this, other in ((pa, pb), (pb, pa)):
        pieces = _split_against(this.edges, other.edges, tau)
        for e in pieces:
            q = e.point_at(0.5)
            d = min(f.distance(q) for f in other.edges)
            if d <= ctol:
                total += 0.5 * e.green()
            elif _ray_parity(other.edges, q, tau):
                total += e.green()
    return total / 2.0


def symmetric_difference_area(a: Region | RegionSet, b: Region | RegionSet) -> float:
    """Area of the symmetric difference; 1-d and 0-d pieces contribute zero."""
    rsa = RegionSet.from_region(a) if isinstance(a, Region) else a
    rsb = RegionSet.from_region(b) if isinstance(b, Region) else b
    area_a = rsa.area()
    area_b = rsb.area()
    tau = rsa.tol.tau_geom
    diam = max(rsa.diameter(), rsb.diameter(), 1.0)
    inter = 0.0
    for pa in rsa.bodies:
        ba = pa.bbox()
        for pb in rsb.bodies:
            bb = pb.bbox()
            if ba[2] < bb[0] - tau or bb[2] < ba[0] - tau or \
                    ba[3] < bb[1] - tau or bb[3] < ba[1] - tau:
                continue
            inter += _pair_intersection_area(pa, pb, tau, diam)
    return area_a + area_b - 2.0 * inter
