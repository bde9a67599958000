"""Command-line front end.

Exit codes: 0 determined success, 1 invalid region, 2 IO/schema/parameter
errors, 3 criterion silent (NOT_DETERMINED), 4 construction failure.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import shapes_io
from .criterion import (NOT_DETERMINED, check_prescribed_curvature,
                        check_self_cheeger, maximal_minimizer)
from .construct import build_self_cheeger
from .errors import (BadFixtureParams, CheegerKitError, InvalidRegion,
                     CertificateUnavailable, NeckObstruction)
from .fixtures import fixture, fixture_names
from .morphology import dilate, erode, open_region
from .oracle import cheeger_estimate, write_pgm
from .regionset import RegionSet
from .svg_render import write_svg
from .tolerances import TolerancePolicy

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_IO = 2
EXIT_UNDETERMINED = 3
EXIT_CONSTRUCT = 4


def _tolerances(args) -> TolerancePolicy:
    return TolerancePolicy(tau_geom=args.tol_geom, tau_set=args.tol_set)


def _load_region(args):
    with open(args.input) as f:
        obj = json.load(f)
    return shapes_io.region_from_obj(obj, _tolerances(args))


def _load_region_set(args) -> RegionSet:
    with open(args.input) as f:
        obj = json.load(f)
    tol = _tolerances(args)
    if "edges" in obj:
        region = shapes_io.region_from_obj(obj, tol)
        region.require_valid()
        return RegionSet.from_region(region)
    return RegionSet.from_obj(obj, tol)


def _write_json(path: str | None, obj) -> None:
    text = shapes_io.dumps(obj)
    if path:
        with open(path, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def cmd_analyze(args) -> int:
    region = _load_region(args)
    rep = region.validate()
    if not rep.ok:
        _write_json(args.json, {"valid": False, "issues": rep.issues})
        return EXIT_INVALID
    verdict = check_self_cheeger(region)
    out = {"valid": True, "cheeger": verdict.to_obj(),
           "tolerances": {"tau_geom": region.tol.tau_geom,
                          "tau_set": region.tol.tau_set,
                          "tau_radius": region.tol.tau_radius}}
    pmc = None
    if args.kappa is not None:
        pmc = check_prescribed_curvature(region, args.kappa)
        out["pmc"] = pmc.to_obj()
    if args.svg:
        radius = args.radius
        if radius is None and args.kappa is not None:
            radius = 1.0 / args.kappa
        if radius is None and verdict.status != NOT_DETERMINED:
            radius = verdict.R
        inner = minimizer = None
        if radius is not None:
            inner = erode(region, radius)
            minimizer = dilate(inner, radius)
        write_svg(args.svg, region, inner, minimizer)
    _write_json(args.json, out)
    undetermined = verdict.status == NOT_DETERMINED or \
        (pmc is not None and pmc.status == NOT_DETERMINED)
    return EXIT_UNDETERMINED if undetermined else EXIT_OK


def cmd_construct(args) -> int:
    omega = _load_region_set(args)
    try:
        report = build_self_cheeger(omega)
    except CheegerKitError as exc:
        _write_json(args.json, {"error": type(exc).__name__, "message": str(exc)})
        return EXIT_CONSTRUCT
    out = report.to_obj()
    out["Omega"] = shapes_io.region_to_obj(report.Omega)
    out["omega"] = report.omega.to_obj()
    if args.svg:
        write_svg(args.svg, report.Omega, report.omega, None)
    _write_json(args.json, out)
    return EXIT_OK


def cmd_oracle(args) -> int:
    region = _load_region(args)
    region.require_valid()
    est = cheeger_estimate(region, args.resolution)
    out = est.to_obj()
    if args.pgm:
        write_pgm(args.pgm, est.minimizer_pixels)
    _write_json(args.json, out)
    return EXIT_OK


def cmd_render(args) -> int:
    region = _load_region(args)
    region.require_valid()
    radius = args.radius
    if radius is None and args.kappa is not None:
        radius = 1.0 / args.kappa
    if radius is None:
        verdict = check_self_cheeger(region)
        if verdict.status != NOT_DETERMINED:
            radius = verdict.R
    inner = minimizer = None
    if radius is not None:
        inner = erode(region, radius)
        minimizer = dilate(inner, radius)
    write_svg(args.svg, region, inner, minimizer)
    return EXIT_OK


def cmd_fixtures(args) -> int:
    region = fixture(args.name, args.params if args.params else None,
                     _tolerances(args))
    path = args.json or f"{args.name}.json"
    with open(path, "w") as f:
        f.write(shapes_io.dumps(shapes_io.region_to_obj(region)))
    return EXIT_OK


def cmd_erode(args) -> int:
    region = _load_region(args)
    region.require_valid()
    result = erode(region, args.radius)
    _write_json(args.json, result.to_obj())
    if args.svg:
        write_svg(args.svg, region, result, None)
    return EXIT_OK


def cmd_open(args) -> int:
    region = _load_region(args)
    region.require_valid()
    inner = erode(region, args.radius)
    result = dilate(inner, args.radius)
    _write_json(args.json, result.to_obj())
    if args.svg:
        write_svg(args.svg, region, inner, result)
    return EXIT_OK


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cheegerkit",
        description="Rolling-disk certification of planar self-Cheeger sets "
                    "and prescribed-curvature minimizers")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, need_input=True):
        if need_input:
            sp.add_argument("--input", required=True, help="shape JSON path")
        sp.add_argument("--json", default=None, help="output JSON path (default stdout)")
        sp.add_argument("--svg", default=None, help="optional SVG output path")
        sp.add_argument("--tol-geom", type=float, default=1e-9, dest="tol_geom")
        sp.add_argument("--tol-set", type=float, default=1e-7, dest="tol_set")

    sp = sub.add_parser("analyze", help="self-Cheeger / prescribed-curvature verdicts")
    common(sp)
    sp.add_argument("--kappa", type=float, default=None)
    sp.add_argument("--radius", type=float, default=None,
                    help="radius for SVG layers (default: verdict radius)")
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("construct", help="build a self-Cheeger set from an inner set")
    common(sp)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("oracle", help="grid/min-cut Cheeger constant bracket")
    common(sp)
    sp.add_argument("--resolution", type=int, default=512)
    sp.add_argument("--pgm", default=None, help="optional minimizer mask PGM dump")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("render", help="SVG of omega, inner set, minimizer")
    common(sp)
    sp.add_argument("--kappa", type=float, default=None)
    sp.add_argument("--radius", type=float, default=None)
    sp.set_defaults(func=cmd_render)

    sp = sub.add_parser("fixtures", help="write a named fixture's shape JSON")
    sp.add_argument("name", help=f"one of {', '.join(fixture_names())}")
    sp.add_argument("params", nargs="*", type=float)
    sp.add_argument("--json", default=None)
    sp.add_argument("--tol-geom", type=float, default=1e-9, dest="tol_geom")
    sp.add_argument("--tol-set", type=float, default=1e-7, dest="tol_set")
    sp.set_defaults(func=cmd_fixtures)

    sp = sub.add_parser("erode", help="inner parallel set at a radius")
    common(sp)
    sp.add_argument("--radius", type=float, required=True)
    sp.set_defaults(func=cmd_erode)

    sp = sub.add_parser("open", help="morphological opening at a radius")
    common(sp)
    sp.add_argument("--radius", type=float, required=True)
    sp.set_defaults(func=cmd_open)
    return p


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    # render requires an svg path
    if args.command == "render" and not args.svg:
        print("render requires --svg", file=sys.stderr)
        return EXIT_IO
    try:
        return args.func(args)
    except (OSError, json.JSONDecodeError, shapes_io.ShapeFormatError,
            BadFixtureParams, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except InvalidRegion as exc:
        print(f"invalid region: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (NeckObstruction, CertificateUnavailable, CheegerKitError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CONSTRUCT


if __name__ == "__main__":
    sys.exit(main())
