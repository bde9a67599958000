"""Deterministic SVG output with fixed layer ids: omega, inner, minimizer."""
from __future__ import annotations

import math

from .geometry import Arc, ArcPolygon, Edge, Point, Segment
from .region import Region
from .regionset import RegionSet


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _path_d(edges, close: bool) -> str:
    parts = []
    start = edges[0].start
    parts.append(f"M {_fmt(start.x)} {_fmt(-start.y)}")
    for e in edges:
        if isinstance(e, Segment):
            parts.append(f"L {_fmt(e.end.x)} {_fmt(-e.end.y)}")
        else:
            large = 1 if e.sweep > math.pi else 0
            sweep_flag = 0 if e.ccw else 1
            r = _fmt(e.radius)
            parts.append(f"A {r} {r} 0 {large} {sweep_flag} "
                         f"{_fmt(e.end.x)} {_fmt(-e.end.y)}")
    if close:
        parts.append("Z")
    return " ".join(parts)


def render_svg(region: Region, inner: RegionSet | None = None,
               minimizer: RegionSet | None = None) -> str:
    """SVG with layers omega (outline), inner (parallel set, spines stroked),
    minimizer (fill). Byte-deterministic for fixed inputs."""
    x0, y0, x1, y1 = region.bbox()
    pad = 0.05 * max(x1 - x0, y1 - y0)
    vb = (x0 - pad, -(y1 + pad), (x1 - x0) + 2 * pad, (y1 - y0) + 2 * pad)
    sw = _fmt(max(x1 - x0, y1 - y0) / 400.0)
    dot = max(x1 - x0, y1 - y0) / 150.0
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox='
        f'"{_fmt(vb[0])} {_fmt(vb[1])} {_fmt(vb[2])} {_fmt(vb[3])}">',
    ]
    if minimizer is not None and not minimizer.is_empty():
        lines.append('<g id="minimizer" fill="#9ecae1" stroke="none">')
        for b in minimizer.bodies:
            lines.append(f'<path d="{_path_d(b.edges, True)}"/>')
        lines.append("</g>")
    if inner is not None and not inner.is_empty():
        lines.append(f'<g id="inner" fill="#3182bd" fill-opacity="0.45" '
                     f'stroke="#08519c" stroke-width="{sw}">')
        for b in inner.bodies:
            lines.append(f'<path d="{_path_d(b.edges, True)}"/>')
        for ch in inner.curves:
            lines.append(f'<path d="{_path_d(ch, False)}" fill="none"/>')
        for p in inner.points:
            lines.append(f'<circle cx="{_fmt(p.x)}" cy="{_fmt(-p.y)}" '
                         f'r="{_fmt(dot)}"/>')
        lines.append("</g>")
    lines.append(f'<g id="omega" fill="none" stroke="#252525" '
                 f'stroke-width="{sw}">')
    lines.append(f'<path d="{_path_d(region.edges, True)}"/>')
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def write_svg(path: str, region: Region, inner: RegionSet | None = None,
              minimizer: RegionSet | None = None) -> None:
    with open(path, "w") as f:
        f.write(render_svg(region, inner, minimizer))
