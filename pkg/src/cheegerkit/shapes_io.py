"""JSON shape formats shared by the CLI and all modules.

Region:    {"edges": [{"type": "segment", "from": [x, y], "to": [x, y]}
                      | {"type": "arc", "center": [x, y], "radius": r,
                         "from_angle": a0, "to_angle": a1, "ccw": true}, ...]}
RegionSet: {"bodies": [RegionEdges...], "curves": [EdgeChain...],
            "points": [[x, y], ...]}

Floats are emitted by json with shortest round-trip repr, so one
parse -> serialize normalization pass is byte-stable.
"""
from __future__ import annotations

import json
from typing import Any

from .geometry import Arc, ArcPolygon, Edge, Point, Segment
from .region import Region
from .tolerances import DEFAULT_TOL, TolerancePolicy


class ShapeFormatError(ValueError):
    pass


def edge_to_obj(e: Edge) -> dict[str, Any]:
    if isinstance(e, Segment):
        return {"type": "segment", "from": [e.start.x, e.start.y],
                "to": [e.end.x, e.end.y]}
    return {"type": "arc", "center": [e.center.x, e.center.y], "radius": e.radius,
            "from_angle": e.from_angle, "to_angle": e.to_angle, "ccw": e.ccw}


def edge_from_obj(obj: dict[str, Any]) -> Edge:
    try:
        kind = obj["type"]
        if kind == "segment":
            return Segment(Point(*map(float, obj["from"])), Point(*map(float, obj["to"])))
        if kind == "arc":
            return Arc(Point(*map(float, obj["center"])), float(obj["radius"]),
                       float(obj["from_angle"]), float(obj["to_angle"]), bool(obj["ccw"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ShapeFormatError(f"bad edge object: {exc}") from exc
    raise ShapeFormatError(f"unknown edge type {kind!r}")


def region_to_obj(region: Region) -> dict[str, Any]:
    return {"edges": [edge_to_obj(e) for e in region.edges]}


def region_from_obj(obj: dict[str, Any], tol: TolerancePolicy = DEFAULT_TOL) -> Region:
    if not isinstance(obj, dict) or "edges" not in obj:
        raise ShapeFormatError("region object must have an 'edges' list")
    edges = [edge_from_obj(e) for e in obj["edges"]]
    if not edges:
        raise ShapeFormatError("region has no edges")
    return Region(ArcPolygon(edges), tol)


def chain_to_obj(edges: tuple[Edge, ...] | list[Edge]) -> list[dict[str, Any]]:
    return [edge_to_obj(e) for e in edges]


def chain_from_obj(objs: list[dict[str, Any]]) -> list[Edge]:
    return [edge_from_obj(e) for e in objs]


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def loads(text: str) -> Any:
    return json.loads(text)


def save_region(path: str, region: Region) -> None:
    with open(path, "w") as f:
        f.write(dumps(region_to_obj(region)))


def load_region(path: str, tol: TolerancePolicy = DEFAULT_TOL) -> Region:
    with open(path) as f:
        return region_from_obj(json.load(f), tol)
