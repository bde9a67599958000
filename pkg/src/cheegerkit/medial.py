"""Inner medial axis of an arc-polygon region with an exact radius function.

Topology comes from the Voronoi diagram of a dense boundary sampling
(scipy/Qhull); geometry is then made exact by identifying the contacting
boundary features of every vertex/branch and Newton-refining equidistance.
Branches between parallel segments or concentric arcs carry an exactly
constant radius, which is what makes degenerate (1-d) inner parallel sets
detectable at 1e-9 tolerances.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.spatial import Voronoi

from .errors import NumericalDegeneracy
from .geometry import Arc, Point, Segment
from .region import Region, reflex_vertex_ids

_SAMPLES_BASE = 1600          # target boundary samples at default density
_SAMPLES_MAX = 60000


# ---------------------------------------------------------------------------
# smooth distance features

@dataclass(frozen=True)
class Feature:
    kind: str            # 'seg' | 'arc_in' | 'arc_out' | 'vertex'
    ax: float
    ay: float            # seg: anchor; vertex: the point; arcs: center
    nx: float = 0.0
    ny: float = 0.0      # seg only: unit normal toward the interior
    r: float = 0.0       # arcs only
    key: tuple = ()
    edge: object = None  # source edge, for clamped-foot validity checks

    def dist(self, x: float, y: float) -> float:
        if self.kind == "seg":
            return (x - self.ax) * self.nx + (y - self.ay) * self.ny
        d = math.hypot(x - self.ax, y - self.ay)
        if self.kind == "vertex":
            return d
        if self.kind == "arc_in":
            return self.r - d
        return d - self.r

    def grad(self, x: float, y: float) -> tuple[float, float]:
        if self.kind == "seg":
            return self.nx, self.ny
        dx, dy = x - self.ax, y - self.ay
        d = math.hypot(dx, dy)
        if d == 0.0:
            return 0.0, 0.0
        if self.kind == "arc_in":
            return -dx / d, -dy / d
        return dx / d, dy / d

    def project(self, x: float, y: float) -> Point:
        if self.kind == "seg":
            f = self.dist(x, y)
            return Point(x - f * self.nx, y - f * self.ny)
        if self.kind == "vertex":
            return Point(self.ax, self.ay)
        dx, dy = x - self.ax, y - self.ay
        d = math.hypot(dx, dy)
        if d == 0.0:
            return Point(self.ax + self.r, self.ay)
        return Point(self.ax + self.r * dx / d, self.ay + self.r * dy / d)


def _edge_feature(edge, idx: int, tau: float) -> Feature:
    if isinstance(edge, Segment):
        t = edge.tangent_at(0.5)
        return Feature("seg", edge.start.x, edge.start.y, -t.y, t.x,
                       key=("seg", idx), edge=edge)
    c, r = edge.center, edge.radius
    kind = "arc_in" if edge.ccw else "arc_out"
    key = (kind, round(c.x / tau), round(c.y / tau), round(r / tau))
    return Feature(kind, c.x, c.y, r=r, key=key, edge=edge)


def _foot_valid(f: Feature, x: float, y: float, band: float) -> bool:
    """True when the smooth feature distance is realized on the physical edge."""
    if f.edge is None:
        return True
    return abs(f.edge.distance(Point(x, y)) - abs(f.dist(x, y))) <= band


def _vertex_feature(p: Point, tau: float) -> Feature:
    return Feature("vertex", p.x, p.y, key=("vertex", round(p.x / tau), round(p.y / tau)))


# ---------------------------------------------------------------------------
# axis data model

@dataclass
class CriticalPoint:
    xy: tuple[float, float]
    rho: float
    antipodal_residual: float
    projections: tuple[Point, Point]
    is_max: bool = False


@dataclass
class MedialNode:
    xy: tuple[float, float]
    rho: float
    contacts: list[Feature]
    projections: list[Point]
    kind: str = "junction"   # 'junction' | 'arc_center' | 'loose'


@dataclass
class MedialBranch:
    a: int
    b: int
    f1: Feature
    f2: Feature
    samples: np.ndarray          # (K, 2) ordered a -> b
    rhos: np.ndarray
    const_rho: float | None = None
    crit: list[CriticalPoint] = field(default_factory=list)

    def rho_sequence(self, rho_a: float, rho_b: float) -> list[float]:
        """Radii at [node a, interior critical points in order, node b]."""
        return [rho_a] + [c.rho for c in self.crit] + [rho_b]

    def min_rho(self, rho_a: float, rho_b: float) -> float:
        if self.const_rho is not None:
            return self.const_rho
        return min(self.rho_sequence(rho_a, rho_b))

    def max_rho(self, rho_a: float, rho_b: float) -> float:
        if self.const_rho is not None:
            return self.const_rho
        return max(self.rho_sequence(rho_a, rho_b))

    def length(self) -> float:
        d = np.diff(self.samples, axis=0)
        return float(np.hypot(d[:, 0], d[:, 1]).sum())


@dataclass
class MedialAxis:
    nodes: list[MedialNode]
    branches: list[MedialBranch]
    delta: float                 # boundary sampling spacing used
    region: Region

    @property
    def inradius(self) -> float:
        # interior maxima of the radius are nodes, constant stretches, or
        # polished branch-critical points; raw samples only add noise
        best = 0.0
        for n in self.nodes:
            best = max(best, n.rho)
        for b in self.branches:
            if b.const_rho is not None:
                best = max(best, b.const_rho)
            for c in b.crit:
                best = max(best, c.rho)
        return best

    def node_neighbors(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {i: [] for i in range(len(self.nodes))}
        for bi, b in enumerate(self.branches):
            adj[b.a].append(bi)
            adj[b.b].append(bi)
        return adj

    # -- level-set queries ----------------------------------------------------
    def _branch_runs(self, b: MedialBranch, eff: float):
        """Maximal runs of {rho >= eff} over the piecewise-monotone profile.

        Profile values are [rho(a), interior criticals..., rho(b)]; between
        consecutive values the radius is monotone, so runs of passing values
        give the connectivity of the sublevel structure on the branch.
        """
        if b.const_rho is not None:
            vals = [b.const_rho, b.const_rho]
        else:
            vals = b.rho_sequence(self.nodes[b.a].rho, self.nodes[b.b].rho)
        above = [v >= eff for v in vals]
        runs = []
        i = 0
        while i < len(above):
            if above[i]:
                j = i
                while j + 1 < len(above) and above[j + 1]:
                    j += 1
                runs.append((i, j))
                i = j + 1
            else:
                i += 1
        return runs, len(vals)

    def level_component_count(self, r: float, tau_radius: float) -> int:
        """Connected components of the inner parallel set at distance r."""
        eff = r - tau_radius
        n = len(self.nodes)
        parent = list(range(n))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        def union(i: int, j: int) -> None:
            parent[find(i)] = find(j)

        islands = 0
        for b in self.branches:
            runs, m = self._branch_runs(b, eff)
            for i0, i1 in runs:
                at_a, at_b = i0 == 0, i1 == m - 1
                if at_a and at_b:
                    union(b.a, b.b)
                elif not at_a and not at_b:
                    islands += 1
        roots = {find(i) for i, nd in enumerate(self.nodes) if nd.rho >= eff}
        return len(roots) + islands

    def degenerate_pieces(self, r: float, tau_radius: float):
        """1-d stretches and isolated points of {dist >= r}.

        Curves are branches of exactly constant radius equal to r; points are
        local maxima of the radius (nodes or branch criticals) at level r that
        no passing branch extends.
        """
        curves: list = []
        points: list[Point] = []
        curve_nodes: set[int] = set()
        for b in self.branches:
            if b.const_rho is not None and abs(b.const_rho - r) <= tau_radius:
                curves.append(self._branch_edge(b))
                curve_nodes.add(b.a)
                curve_nodes.add(b.b)
        for i, nd in enumerate(self.nodes):
            if abs(nd.rho - r) > tau_radius or i in curve_nodes:
                continue
            if self._node_isolated_at(i, r, tau_radius):
                points.append(Point(*nd.xy))
        for b in self.branches:
            if b.const_rho is not None:
                continue
            for c in b.crit:
                if c.is_max and abs(c.rho - r) <= tau_radius:
                    points.append(Point(*c.xy))
        return curves, points

    def _branch_edge(self, b: MedialBranch):
        pa = Point(*self.nodes[b.a].xy)
        pb = Point(*self.nodes[b.b].xy)
        kinds = {b.f1.kind, b.f2.kind}
        if kinds == {"seg"}:
            return Segment(pa, pb)
        # concentric arcs (or arc + center vertex): the stretch is an arc
        arc_f = b.f1 if b.f1.kind.startswith("arc") else b.f2
        cx, cy = arc_f.ax, arc_f.ay
        rad = 0.5 * (math.hypot(pa.x - cx, pa.y - cy) + math.hypot(pb.x - cx, pb.y - cy))
        a0 = math.atan2(pa.y - cy, pa.x - cx)
        a1 = math.atan2(pb.y - cy, pb.x - cx)
        mid = b.samples[len(b.samples) // 2]
        am = math.atan2(mid[1] - cy, mid[0] - cx)
        cand = Arc(Point(cx, cy), rad, a0, a1, True)
        if not cand.contains_angle(am):
            cand = Arc(Point(cx, cy), rad, a0, a1, False)
        return cand

    def _node_isolated_at(self, i: int, r: float, tau_radius: float) -> bool:
        for b in self.branches:
            if b.a != i and b.b != i:
                continue
            if b.const_rho is not None and b.const_rho >= r - tau_radius:
                return False
            # radius profile next to this end: does the level set extend?
            rhos = b.rhos if b.a == i else b.rhos[::-1]
            k = min(2, len(rhos) - 1)
            if k > 0 and float(rhos[k]) >= r - tau_radius:
                return False
        return True

    def strict_violations(self, R: float, tau_radius: float, tau_geom: float):
        """Rolling positions of radius R whose two contacts are antipodal."""
        out = []
        for b in self.branches:
            if b.const_rho is not None and abs(b.const_rho - R) <= tau_radius:
                mid = b.samples[len(b.samples) // 2]
                x, y = float(mid[0]), float(mid[1])
                p1 = b.f1.project(x, y)
                p2 = b.f2.project(x, y)
                res = math.hypot(p1.x + p2.x - 2 * x, p1.y + p2.y - 2 * y)
                if res <= max(tau_geom, 1e-9 * self.region.diameter()):
                    out.append((Point(x, y), b.const_rho, (p1, p2)))
            else:
                for c in b.crit:
                    if abs(c.rho - R) <= tau_radius and \
                            c.antipodal_residual <= max(tau_geom, 1e-9 * self.region.diameter()):
                        out.append((Point(*c.xy), c.rho, c.projections))
        for nd in self.nodes:
            if abs(nd.rho - R) > tau_radius:
                continue
            z = Point(*nd.xy)
            ps = nd.projections
            found = None
            for i in range(len(ps)):
                for j in range(i + 1, len(ps)):
                    res = math.hypot(ps[i].x + ps[j].x - 2 * z.x,
                                     ps[i].y + ps[j].y - 2 * z.y)
                    if res <= max(tau_geom, 1e-9 * self.region.diameter()):
                        found = (z, nd.rho, (ps[i], ps[j]))
                        break
                if found:
                    break
            if found:
                out.append(found)
        return out

    def witness_path(self, c0: Point, c1: Point, r: float,
                     tau_radius: float) -> list[Point] | None:
        """Polyline inside the inner parallel set joining two disk centers."""
        eff = r - tau_radius
        cloud: list[tuple[float, float]] = []
        links: list[tuple[int, int]] = []
        node_slot: dict[int, int] = {}
        for i, nd in enumerate(self.nodes):
            if nd.rho >= eff:
                node_slot[i] = len(cloud)
                cloud.append(nd.xy)
        for b in self.branches:
            runs, m = self._branch_runs(b, eff)
            full = any(i0 == 0 and i1 == m - 1 for i0, i1 in runs)
            if not full or b.a not in node_slot or b.b not in node_slot:
                continue
            prev = node_slot[b.a]
            for s, rho in zip(b.samples, b.rhos):
                if rho >= eff - 1e-12:
                    cloud.append((float(s[0]), float(s[1])))
                    links.append((prev, len(cloud) - 1))
                    prev = len(cloud) - 1
            links.append((prev, node_slot[b.b]))
        if not cloud:
            return None
        entry0 = min(range(len(cloud)), key=lambda k: math.hypot(cloud[k][0] - c0.x, cloud[k][1] - c0.y))
        entry1 = min(range(len(cloud)), key=lambda k: math.hypot(cloud[k][0] - c1.x, cloud[k][1] - c1.y))
        adj: dict[int, list[int]] = {}
        for a, b2 in links:
            adj.setdefault(a, []).append(b2)
            adj.setdefault(b2, []).append(a)
        prev_map = {entry0: entry0}
        queue = [entry0]
        while queue:
            u = queue.pop(0)
            if u == entry1:
                break
            for v in adj.get(u, []):
                if v not in prev_map:
                    prev_map[v] = u
                    queue.append(v)
        if entry1 not in prev_map:
            return None
        path = [entry1]
        while path[-1] != entry0:
            path.append(prev_map[path[-1]])
        pts = [Point(*cloud[k]) for k in reversed(path)]
        return [c0] + pts + [c1]


# ---------------------------------------------------------------------------
# construction

def medial_axis(region: Region, max_spacing: float | None = None) -> MedialAxis:
    """Compute (and cache) the inner medial axis of a valid region."""
    region.require_valid()
    diam = region.diameter()
    perim = region.perimeter()
    delta_default = perim / _SAMPLES_BASE
    delta = delta_default if max_spacing is None else min(max_spacing, delta_default)
    delta = max(delta, perim / _SAMPLES_MAX)
    cached = getattr(region, "_medial", None)
    if cached is not None and cached.delta <= delta * 1.0000001:
        return cached
    ma = _build(region, delta, diam)
    region._medial = ma
    return ma


def _build(region: Region, delta: float, diam: float) -> MedialAxis:
    tau = region.tol.tau_geom
    edges = region.edges
    n_edges = len(edges)
    edge_feats = [_edge_feature(e, i, tau) for i, e in enumerate(edges)]
    reflex_ids = set(reflex_vertex_ids(region.outer))

    # boundary sampling: interior points of every edge, plus reflex vertices
    pts: list[tuple[float, float]] = []
    site: list[int] = []
    for i, e in enumerate(edges):
        n_s = max(4, int(math.ceil(e.length() / delta)))
        for k in range(n_s):
            p = e.point_at((k + 0.5) / n_s)
            pts.append((p.x, p.y))
            site.append(i)
    for i in reflex_ids:
        v = edges[(i + 1) % n_edges].start
        pts.append((v.x, v.y))
        site.append(n_edges + i)
    samples = np.asarray(pts)
    site_arr = np.asarray(site)

    vor = Voronoi(samples)
    verts = vor.vertices
    if len(verts) == 0:
        raise NumericalDegeneracy("no Voronoi vertices from boundary sampling")
    inside = region.contains_mask(verts)
    clearance = region.distance_many(verts)
    keep = inside & (clearance >= 3.0 * delta)

    # ridge graph between kept Voronoi vertices, labeled by the site pair
    adj: dict[int, list[tuple[int, tuple[int, int]]]] = {}
    for (s1, s2), (v1, v2) in zip(vor.ridge_points, vor.ridge_vertices):
        if v1 < 0 or v2 < 0 or not (keep[v1] and keep[v2]):
            continue
        a, b = int(site_arr[s1]), int(site_arr[s2])
        if a == b:
            continue
        lab = (a, b) if a < b else (b, a)
        adj.setdefault(v1, []).append((v2, lab))
        adj.setdefault(v2, []).append((v1, lab))

    def site_feature(sid: int) -> Feature:
        if sid < n_edges:
            return edge_feats[sid]
        vi = sid - n_edges
        return _vertex_feature(edges[(vi + 1) % n_edges].start, tau)

    chains = _extract_chains(adj)
    builder = _AxisBuilder(region, delta, diam)
    for vids, lab in chains:
        f1, f2 = site_feature(lab[0]), site_feature(lab[1])
        builder.add_chain(verts[vids], f1, f2)
    if not builder.nodes and not builder.branches:
        # pure arc-center axis (e.g. a disk): every Voronoi cell of the
        # cocircular sampling is unbounded, so no ridges survived
        seen = set()
        for e in edges:
            if isinstance(e, Arc):
                f = _edge_feature(e, 0, tau)
                if f.key in seen:
                    continue
                seen.add(f.key)
                res = builder._arc_center_node(f)
                if res is not None:
                    builder._add_node(*res)
    return builder.finish()


def _extract_chains(adj: dict[int, list[tuple[int, tuple[int, int]]]]):
    """Maximal constant-label chains in the kept Voronoi graph."""
    edge_set: dict[tuple[int, int], tuple[int, int]] = {}
    for v, nbrs in adj.items():
        for w, lab in nbrs:
            key = (v, w) if v < w else (w, v)
            edge_set[key] = lab

    def is_interior(v: int) -> bool:
        nbrs = adj.get(v, [])
        return len(nbrs) == 2 and nbrs[0][1] == nbrs[1][1]

    chains = []
    used: set[tuple[int, int]] = set()
    for (v, w), lab in edge_set.items():
        if (v, w) in used:
            continue
        # walk both directions until label change / junction
        path = [v, w]
        used.add((v, w))
        for head in (False, True):
            while True:
                tail = path[-1] if head else path[0]
                prev = path[-2] if head else path[1]
                if not is_interior(tail):
                    break
                nxt = None
                for u, l2 in adj[tail]:
                    if u != prev and l2 == lab:
                        key = (tail, u) if tail < u else (u, tail)
                        if key not in used:
                            nxt = u
                            used.add(key)
                        break
                if nxt is None:
                    break
                if head:
                    path.append(nxt)
                else:
                    path.insert(0, nxt)
        chains.append((path, lab))
    return chains


class _AxisBuilder:
    def __init__(self, region: Region, delta: float, diam: float):
        self.region = region
        self.delta = delta
        self.diam = diam
        self.tau = region.tol.tau_geom
        self.sep_tol = max(10.0 * self.tau, 1e-9 * diam)
        self.nodes: list[MedialNode] = []
        self.branches: list[MedialBranch] = []
        self._node_index: list[tuple[float, float]] = []

    # -- feature algebra ----------------------------------------------------
    def _refine_on_bisector(self, x: float, y: float, f1: Feature, f2: Feature,
                            iters: int = 12):
        for _ in range(iters):
            g = f1.dist(x, y) - f2.dist(x, y)
            g1x, g1y = f1.grad(x, y)
            g2x, g2y = f2.grad(x, y)
            dx, dy = g1x - g2x, g1y - g2y
            n2 = dx * dx + dy * dy
            if n2 < 1e-24:
                break
            step = g / n2
            x -= step * dx
            y -= step * dy
            if abs(g) < 1e-15 * max(1.0, self.diam):
                break
        return x, y

    def _newton_equal(self, x: float, y: float, feats: list[Feature],
                      iters: int = 40):
        """Solve f_i(x) all equal; returns (x, y, rho) or None."""
        groups: dict[tuple, Feature] = {}
        for f in feats:
            groups.setdefault(f.key, f)
        reps = list(groups.values())
        if len(reps) < 2:
            if len(reps) == 1 and reps[0].kind in ("arc_in", "arc_out"):
                return self._arc_center_node(reps[0])
            return None
        for _ in range(iters):
            # arc-center singularity: snap and dispatch
            for f in reps:
                if f.kind in ("arc_in", "arc_out") and \
                        math.hypot(x - f.ax, y - f.ay) < max(1e-7 * self.diam, 10 * self.tau):
                    res = self._arc_center_node(f)
                    if res is not None:
                        return res
            f0 = reps[0].dist(x, y)
            g0 = reps[0].grad(x, y)
            rows, rhs = [], []
            for f in reps[1:]:
                gi = f.grad(x, y)
                rows.append([gi[0] - g0[0], gi[1] - g0[1]])
                rhs.append(-(f.dist(x, y) - f0))
            A = np.asarray(rows)
            b = np.asarray(rhs)
            try:
                step, *_ = np.linalg.lstsq(A, b, rcond=None)
            except np.linalg.LinAlgError:
                return None
            x += float(step[0])
            y += float(step[1])
            if float(np.abs(b).max()) < 1e-14 * max(1.0, self.diam):
                break
        vals = [f.dist(x, y) for f in reps]
        rho = sum(vals) / len(vals)
        if max(vals) - min(vals) > 1e-9 * max(1.0, self.diam):
            return None
        return x, y, rho

    def _arc_center_node(self, f: Feature):
        x, y, rho = f.ax, f.ay, f.r
        d = self.region.unsigned_distance(Point(x, y))
        if abs(d - rho) <= 1e-7 * max(1.0, self.diam):
            return x, y, rho, "arc_center"
        return None

    def _true_contacts(self, x: float, y: float, band: float):
        """(rho, features, projections) from clamped distances to every edge."""
        edges = self.region.edges
        eps_end = 1e-9
        cands: list[tuple[float, Feature, Point]] = []
        for i, e in enumerate(edges):
            if isinstance(e, Segment):
                t = e.closest_param(Point(x, y))
            else:
                t = e.closest_param(Point(x, y))
            q = e.point_at(t)
            d = math.hypot(x - q.x, y - q.y)
            if t <= eps_end or t >= 1.0 - eps_end:
                feat = _vertex_feature(q, self.tau)
            else:
                feat = _edge_feature(e, i, self.tau)
            cands.append((d, feat, q))
        dmin = min(c[0] for c in cands)
        feats: list[Feature] = []
        projs: list[Point] = []
        seen = set()
        for d, feat, q in cands:
            if d <= dmin + band:
                if feat.key in seen:
                    continue
                seen.add(feat.key)
                feats.append(feat)
                projs.append(feat.project(x, y) if feat.kind != "vertex" else q)
        return dmin, feats, projs

    # -- chains -> branches ---------------------------------------------------
    def add_chain(self, raw: np.ndarray, f1: Feature, f2: Feature) -> None:
        if f1.key == f2.key:
            # cocircular pair: real axis element is the shared circle center
            if f1.kind in ("arc_in", "arc_out"):
                res = self._arc_center_node(f1)
                if res is not None:
                    self._add_node(*res)
            return
        # subsample and refine onto the exact bisector
        k = min(len(raw), 48)
        idx = np.unique(np.linspace(0, len(raw) - 1, k).astype(int))
        pts = []
        for i in idx:
            x, y = self._refine_on_bisector(raw[i, 0], raw[i, 1], f1, f2)
            pts.append((x, y))
        pts = np.asarray(pts)
        rhos = np.array([0.5 * (f1.dist(x, y) + f2.dist(x, y)) for x, y in pts])
        # sample validity: both feet on the physical edges (rejects phantom
        # bisectors of extended lines/circles), feet separated (rejects
        # same-foot pseudo branches), and the pair actually nearest; the band
        # allows the second-order overshoot of raw Voronoi vertices past
        # junctions (~delta^2 / rho)
        base_band = max(100.0 * self.tau, 1e-7 * self.diam)
        d_true = self.region.distance_many(pts)
        bands = np.maximum(base_band,
                           4.0 * self.delta ** 2 / np.maximum(rhos, self.delta))
        ok = np.array([
            f1.project(x, y).dist(f2.project(x, y)) > self.sep_tol
            and _foot_valid(f1, x, y, b) and _foot_valid(f2, x, y, b)
            for (x, y), b in zip(pts, bands)])
        ok &= np.abs(rhos - d_true) <= bands
        if not ok.any():
            return
        # longest contiguous valid run
        runs = []
        i = 0
        while i < len(ok):
            if ok[i]:
                j = i
                while j + 1 < len(ok) and ok[j + 1]:
                    j += 1
                runs.append((i, j))
                i = j + 1
            else:
                i += 1
        first, last = max(runs, key=lambda ij: ij[1] - ij[0])
        pts = pts[first:last + 1]
        rhos = rhos[first:last + 1]
        if len(pts) < 2:
            return
        seg_lens = np.hypot(np.diff(pts[:, 0]), np.diff(pts[:, 1]))
        if float(seg_lens.sum()) < max(3.0 * self.delta, 1e-6 * self.diam):
            # sampling-noise stub next to a tangency; the adjacent real
            # branches will pin down the node on their own
            return

        const_rho = self._const_radius(f1, f2)
        if const_rho is not None and abs(float(np.median(rhos)) - const_rho) > 1e-6 * max(1.0, self.diam):
            const_rho = None

        node_a = self._branch_end_node(pts[0], f1, f2)
        node_b = self._branch_end_node(pts[-1], f1, f2)
        if node_a is None or node_b is None:
            return
        crit = [] if const_rho is not None else self._critical_points(pts, rhos, f1, f2)
        self.branches.append(MedialBranch(node_a, node_b, f1, f2, pts, rhos,
                                          const_rho, crit))

    def _const_radius(self, f1: Feature, f2: Feature) -> float | None:
        if f1.kind == "seg" and f2.kind == "seg":
            if abs(f1.nx * f2.ny - f1.ny * f2.nx) <= 1e-12 and \
                    (f1.nx * f2.nx + f1.ny * f2.ny) < 0.0:
                gap = abs((f2.ax - f1.ax) * f1.nx + (f2.ay - f1.ay) * f1.ny)
                return 0.5 * gap
        kinds = {f1.kind, f2.kind}
        if kinds <= {"arc_in", "arc_out"}:
            if math.hypot(f1.ax - f2.ax, f1.ay - f2.ay) <= 10.0 * self.tau:
                return 0.5 * abs(f1.r - f2.r)
        if kinds == {"arc_in", "vertex"}:
            arc = f1 if f1.kind == "arc_in" else f2
            v = f2 if f1.kind == "arc_in" else f1
            if math.hypot(arc.ax - v.ax, arc.ay - v.ay) <= 10.0 * self.tau:
                return 0.5 * arc.r
        return None

    def _bisector_walk(self, x0: float, y0: float, f1: Feature, f2: Feature):
        """Arclength parametrization s -> exact bisector point near (x0, y0)."""
        def at(s: float) -> tuple[float, float]:
            g1 = f1.grad(x0, y0)
            g2 = f2.grad(x0, y0)
            dx, dy = g1[0] - g2[0], g1[1] - g2[1]
            n = math.hypot(dx, dy)
            if n < 1e-14:
                return x0, y0
            tx, ty = -dy / n, dx / n
            return self._refine_on_bisector(x0 + s * tx, y0 + s * ty, f1, f2)
        return at

    def _solve_tie_1d(self, x0: float, y0: float, f1: Feature, f2: Feature,
                      g3, span: float) -> tuple[float, float] | None:
        """Point on the bisector of (f1, f2) where g3 vanishes.

        g3 may touch zero tangentially (antipodal/arc-center ends), so the
        solve combines a sign-change bracket with bounded minimization.
        """
        at = self._bisector_walk(x0, y0, f1, f2)

        def g(s: float) -> float:
            x, y = at(s)
            return g3(x, y)

        n_scan = 32
        ss = np.linspace(-span, span, n_scan + 1)
        vals = np.array([g(float(s)) for s in ss])
        tol0 = 1e-9 * max(1.0, self.diam)
        # transversal brackets: take the root nearest the chain end, since a
        # single bisector can carry several junction ties within the span
        brackets = [i for i in range(n_scan)
                    if vals[i] == 0.0 or vals[i] * vals[i + 1] < 0.0]
        if brackets:
            from scipy.optimize import brentq
            i = min(brackets, key=lambda k: abs(0.5 * (ss[k] + ss[k + 1])))
            s_root = brentq(g, float(ss[i]), float(ss[i + 1]),
                            xtol=1e-15 * max(1.0, self.diam), maxiter=200)
            return at(float(s_root))
        # tangential touch: g grazes zero, so solve for the root of g'
        from scipy.optimize import brentq, minimize_scalar
        i0 = int(np.argmin(np.abs(vals)))
        lo = float(ss[max(0, i0 - 1)])
        hi = float(ss[min(n_scan, i0 + 1)])
        h = max(1e-10 * max(1.0, self.diam), (hi - lo) * 1e-7)

        def dg(s: float) -> float:
            return g(s + h) - g(s - h)

        s_star = None
        if dg(lo) * dg(hi) < 0.0:
            s_star = brentq(dg, lo, hi, xtol=1e-15 * max(1.0, self.diam),
                            maxiter=200)
        else:
            res = minimize_scalar(lambda s: abs(g(s)), bounds=(lo, hi),
                                  method="bounded",
                                  options={"xatol": 1e-14 * max(1.0, self.diam)})
            s_star = float(res.x)
        if abs(g(float(s_star))) <= tol0:
            return at(float(s_star))
        return None

    def _branch_end_node(self, end: np.ndarray, f1: Feature, f2: Feature) -> int | None:
        x, y = float(end[0]), float(end[1])
        vband = max(100.0 * self.tau, 1e-7 * self.diam)
        span = max(40.0 * self.delta, 1e-5 * self.diam)
        others = [e for e in self.region.edges
                  if f1.edge is not e and f2.edge is not e]
        foot_tol = max(1e-9 * self.diam, 100.0 * self.tau)

        def g_any(px: float, py: float) -> float:
            # tie of the pair with the nearest genuinely different contact:
            # edges whose closest point coincides with a pair foot are the
            # pair in disguise (shared endpoints, tangent continuations)
            p = Point(px, py)
            p1 = f1.project(px, py)
            p2 = f2.project(px, py)
            d_other = math.inf
            for e in others:
                q = e.closest_point(p)
                if q.dist(p1) <= foot_tol or q.dist(p2) <= foot_tol:
                    continue
                d_other = min(d_other, p.dist(q))
            if not math.isfinite(d_other):
                return 1e6 * max(1.0, self.diam)
            return d_other - 0.5 * (f1.dist(px, py) + f2.dist(px, py))

        hit = self._solve_tie_1d(x, y, f1, f2, g_any, span)
        if hit is not None and math.hypot(hit[0] - x, hit[1] - y) <= 2.0 * span:
            hit = self._snap_arc_center(hit)
            rho = 0.5 * (abs(f1.dist(*hit)) + abs(f2.dist(*hit)))
            d_true = self.region.unsigned_distance(Point(*hit))
            if abs(d_true - rho) <= vband:
                return self._add_node(hit[0], hit[1], rho)
        # no third tie nearby: the branch may terminate on the boundary
        # itself (convex corner, radius -> 0)

        def g0(px: float, py: float) -> float:
            return 0.5 * (f1.dist(px, py) + f2.dist(px, py))

        hit = self._solve_tie_1d(x, y, f1, f2, g0, span)
        if hit is not None and math.hypot(hit[0] - x, hit[1] - y) <= 2.0 * span:
            rho0 = 0.5 * abs(f1.dist(*hit) + f2.dist(*hit))
            if rho0 <= vband:
                return self._add_node(hit[0], hit[1], 0.0, "corner")
        return self._add_node(x, y, 0.5 * (f1.dist(x, y) + f2.dist(x, y)), "loose")

    def _snap_arc_center(self, hit: tuple[float, float]) -> tuple[float, float]:
        """Snap onto an arc center when that center is the exact axis point.

        The boundary-distance field has a nonsmooth maximum at arc centers,
        so a 1e-10 positional error there leaks linearly into the radius;
        snapping restores machine exactness.
        """
        x, y = hit
        for e in self.region.edges:
            if isinstance(e, Arc) and \
                    math.hypot(x - e.center.x, y - e.center.y) <= 1e-5 * self.diam:
                d = self.region.unsigned_distance(e.center)
                if abs(d - e.radius) <= 1e-11 * max(1.0, self.diam):
                    return (e.center.x, e.center.y)
        return hit

    def _add_node(self, x: float, y: float, rho: float, kind: str = "junction") -> int:
        tol = max(1e-7 * self.diam, 100.0 * self.tau)
        for i, (nx, ny) in enumerate(self._node_index):
            if math.hypot(nx - x, ny - y) <= tol:
                return i
        band = max(self.region.tol.tau_radius, 1e-9 * max(1.0, self.diam)) * 10.0
        rho_t, feats, projs = self._true_contacts(x, y, band)
        node = MedialNode((x, y), rho_t, feats, projs, kind)
        self.nodes.append(node)
        self._node_index.append((x, y))
        return len(self.nodes) - 1

    def _critical_points(self, pts: np.ndarray, rhos: np.ndarray,
                         f1: Feature, f2: Feature) -> list[CriticalPoint]:
        out: list[CriticalPoint] = []
        for i in range(1, len(rhos) - 1):
            if (rhos[i] - rhos[i - 1]) * (rhos[i + 1] - rhos[i]) < 0.0:
                res = self._polish_critical(pts[i, 0], pts[i, 1], f1, f2)
                if res is not None:
                    res.is_max = rhos[i] > rhos[i - 1]
                    out.append(res)
        return out

    def _polish_critical(self, x: float, y: float, f1: Feature, f2: Feature,
                         iters: int = 40) -> CriticalPoint | None:
        scale = max(1.0, self.diam)
        for _ in range(iters):
            g1 = f1.grad(x, y)
            g2 = f2.grad(x, y)
            dgx, dgy = g1[0] - g2[0], g1[1] - g2[1]
            nrm = math.hypot(dgx, dgy)
            if nrm < 1e-14:
                return None
            tx, ty = -dgy / nrm, dgx / nrm
            p1 = f1.project(x, y)
            p2 = f2.project(x, y)
            r1 = f1.dist(x, y) - f2.dist(x, y)
            r2 = (p1.x + p2.x - 2.0 * x) * tx + (p1.y + p2.y - 2.0 * y) * ty
            if abs(r1) < 1e-13 * scale and abs(r2) < 1e-13 * scale:
                break
            # numeric Jacobian
            h = 1e-7 * scale
            J = np.zeros((2, 2))
            for j, (hx, hy) in enumerate(((h, 0.0), (0.0, h))):
                q1 = f1.project(x + hx, y + hy)
                q2 = f2.project(x + hx, y + hy)
                rr1 = f1.dist(x + hx, y + hy) - f2.dist(x + hx, y + hy)
                rr2 = (q1.x + q2.x - 2.0 * (x + hx)) * tx + \
                      (q1.y + q2.y - 2.0 * (y + hy)) * ty
                J[0, j] = (rr1 - r1) / h
                J[1, j] = (rr2 - r2) / h
            try:
                step = np.linalg.solve(J, [-r1, -r2])
            except np.linalg.LinAlgError:
                return None
            x += float(step[0])
            y += float(step[1])
        p1 = f1.project(x, y)
        p2 = f2.project(x, y)
        rho = 0.5 * (f1.dist(x, y) + f2.dist(x, y))
        true_d = self.region.unsigned_distance(Point(x, y))
        if abs(true_d - rho) > 1e-7 * scale:
            return None
        res = math.hypot(p1.x + p2.x - 2.0 * x, p1.y + p2.y - 2.0 * y)
        return CriticalPoint((x, y), rho, res, (p1, p2))

    def finish(self) -> MedialAxis:
        # loose ends that failed exact refinement snap to the nearest node
        # (or to each other) so graph connectivity is not broken by a local
        # refinement failure
        n_nodes = len(self.nodes)
        remap = list(range(n_nodes))
        snap = 6.0 * self.delta
        for i, n in enumerate(self.nodes):
            if n.kind != "loose":
                continue
            best, best_d = i, snap
            for j, m in enumerate(self.nodes):
                if j == i or m.kind == "loose":
                    continue
                d = math.hypot(n.xy[0] - m.xy[0], n.xy[1] - m.xy[1])
                if d < best_d:
                    best, best_d = j, d
            remap[i] = best
        for i, n in enumerate(self.nodes):
            if remap[i] != i or n.kind != "loose":
                continue
            for j in range(i):
                m = self.nodes[j]
                if m.kind == "loose" and remap[j] == j and \
                        math.hypot(n.xy[0] - m.xy[0], n.xy[1] - m.xy[1]) <= snap:
                    remap[i] = j
                    break
        branches = []
        used = set()
        for b in self.branches:
            a, c = remap[b.a], remap[b.b]
            if a == c and b.length() < 2.0 * snap:
                continue
            used.add(a)
            used.add(c)
            branches.append(MedialBranch(a, c, b.f1, b.f2, b.samples, b.rhos,
                                         b.const_rho, b.crit))
        # rebuild the node list: referenced nodes plus genuine isolated ones
        keep = [i for i in range(n_nodes)
                if i in used or (remap[i] == i and self.nodes[i].kind != "loose")]
        new_id = {old: new for new, old in enumerate(keep)}
        nodes = [self.nodes[i] for i in keep]
        for b in branches:
            b.a = new_id[b.a]
            b.b = new_id[b.b]
        return MedialAxis(nodes, branches, self.delta, self.region)
