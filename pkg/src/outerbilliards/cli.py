"""Command-line interface.

Exit codes: 0 success, 1 verification violation, 2 input error, 3 the
requested point is on a wall / inside the polygon (map undefined there).
Every command is reproducible from its argument vector alone.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .dynamics import orbit, section
from .errors import MapUndefinedError, ParseError, PolygonError
from .generate import random_nice_polygon
from .geometry import Point
from .model import BilliardModel
from .polygon import parse_polygon
from .quasirational import boundedness_certificate, quasi_analyze
from .scalars import scalar_to_json
from .svg import (
    default_viewport,
    draw_points,
    draw_polygon,
    draw_polyline,
    partition_scene,
    render_scene,
)
from .verify import check_necklace_invariance, negative_controls, run_all

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_UNDEFINED = 3


def _load_polygon(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_polygon(fh.read())
    except OSError as exc:
        raise SystemExit(_fail(f"cannot read {path}: {exc}"))
    except (ParseError, PolygonError) as exc:
        raise SystemExit(_fail(f"invalid polygon: {exc}"))


def _fail(message: str) -> int:
    print(json.dumps({"error": message}, sort_keys=True))
    return EXIT_INPUT


def _parse_point(text: str) -> Point:
    try:
        xs, ys = text.split(",")
        return Point(Fraction(xs), Fraction(ys))
    except ValueError as exc:
        raise SystemExit(_fail(f"bad point {text!r}: {exc}"))


def _emit(doc, path=None):
    text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _pt_json(p: Point):
    return [scalar_to_json(p.x), scalar_to_json(p.y)]


# ---------------------------------------------------------------------------
# commands


def cmd_validate(args) -> int:
    poly = _load_polygon(args.polygon)
    model = BilliardModel(poly)
    pairs = []
    for p, s in zip(model.system.pairs, model.system.spokes):
        pairs.append({
            "index": p.index + 1,
            "edge": p.edge_index + 1,
            "width": scalar_to_json(p.width),
            "v": _pt_json(p.v),
            "w": _pt_json(p.w),
            "V": _pt_json(Point(p.V.x, p.V.y)),
            "special": s.special,
        })
    _emit({
        "schema": "validate/1",
        "valid": True,
        "n": poly.n,
        "reoriented": poly.reoriented,
        "pinwheel_pairs": pairs,
    })
    return EXIT_OK


def cmd_partition(args) -> int:
    poly = _load_polygon(args.polygon)
    model = BilliardModel(poly)
    tiles = []
    partitions = [("forward", model.partition)]
    if args.backward:
        partitions.append(("backward", model.backward_partition))
    for side, part in partitions:
        for t in sorted(part.tiles, key=lambda t: t.label):
            entry = {
                "side": side,
                "label": [t.v_index + 1, t.w_index + 1],
                "translation": _pt_json(Point(t.translation.x, t.translation.y)),
                "bounded": not t.unbounded,
                "constraints": [
                    {"a": scalar_to_json(h.line.a), "b": scalar_to_json(h.line.b),
                     "c": scalar_to_json(h.line.c), "sense": h.sense.value}
                    for h in t.region.constraints],
            }
            if t.path_id is not None:
                p = model.paths.by_id[t.path_id]
                entry["path"] = p.display()
            if not t.unbounded:
                entry["vertices"] = [_pt_json(v) for v in t.region.vertices()]
            tiles.append(entry)
    paths = []
    for p in model.paths.paths:
        paths.append({
            "path": p.display(),
            "involved": [i % poly.n + 1 for i in p.involved],
            "special": [model.system.spoke(i).special for i in p.involved],
            "W": {str(i % poly.n + 1): _pt_json(Point(w.x, w.y))
                  for i, w in sorted(p.steps.items())},
            "endpoints": [_pt_json(p.first_vertex), _pt_json(p.last_vertex)],
        })
    doc = {"schema": "partition/1", "n": poly.n, "tiles": tiles, "paths": paths}
    if args.json or not args.svg:
        _emit(doc, args.json)
    if args.svg:
        scene = partition_scene(model)
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_scene(scene, viewport=default_viewport(model)))
    return EXIT_OK


def cmd_classify(args) -> int:
    poly = _load_polygon(args.polygon)
    model = BilliardModel(poly)
    p = _parse_point(args.point)
    try:
        tile = model.partition.classify(p)
    except MapUndefinedError as exc:
        _emit({"schema": "classify/1", "error": str(exc)})
        return EXIT_UNDEFINED
    path = model.paths.by_id[tile.path_id]
    _emit({
        "schema": "classify/1",
        "label": [tile.v_index + 1, tile.w_index + 1],
        "path": path.display(),
        "translation": _pt_json(Point(tile.translation.x, tile.translation.y)),
        "bounded": not tile.unbounded,
    })
    return EXIT_OK


def cmd_orbit(args) -> int:
    poly = _load_polygon(args.polygon)
    model = BilliardModel(poly)
    p = _parse_point(args.point)
    selector = {"psi": "psi", "psistar": "psi_star", "exit": "exit",
                "return": "first_return", "stripreturn": "strip_return"}[args.map]
    escape = Fraction(args.escape) if args.escape else None
    try:
        if selector in ("psi_star", "strip_return"):
            start = section(model, p)
            rec = orbit(model, start, selector, args.steps, escape)
        else:
            rec = orbit(model, p, selector, args.steps, escape)
    except MapUndefinedError as exc:
        _emit({"schema": "orbit/1", "error": str(exc)})
        return EXIT_UNDEFINED
    events = []
    for e in rec.events:
        entry = {"step": e.step, "point": _pt_json(e.point), "event": e.tag}
        if e.index is not None:
            entry["index"] = e.index + 1
        if e.label is not None:
            entry["label"] = [e.label[0] + 1, e.label[1] + 1]
        events.append(entry)
    _emit({"schema": "orbit/1", "map": args.map, "events": events}, args.json)
    if args.svg:
        pts = rec.points()
        scene = [draw_polygon(model.polygon.vertices),
                 draw_polyline(pts), draw_points([pts[0], pts[-1]])]
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_scene(scene))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.random:
        try:
            spec = dict(kv.split("=") for kv in args.random.split())
            count, nsides = int(spec["count"]), int(spec["n"])
        except (ValueError, KeyError):
            return _fail(f"bad --random spec {args.random!r}; want 'n=K count=M'")
        polys = [random_nice_polygon(nsides, args.seed + i) for i in range(count)]
    else:
        if not args.polygon:
            return _fail("verify needs a polygon file or --random")
        polys = [_load_polygon(args.polygon)]
    all_reports = []
    status = EXIT_OK
    for i, poly in enumerate(polys):
        reports = run_all(poly, args.profile, seed=args.seed, samples=args.samples)
        if args.negative_controls:
            reports.extend(negative_controls(poly, seed=args.seed))
        for rep in reports:
            print(f"[{i}] {rep.summary_line()}")
            is_control = rep.check.startswith("negative-control")
            if is_control:
                if rep.passed and rep.attempted == 0:
                    print(f"[{i}] (control not applicable on this polygon)")
                elif rep.passed:
                    status = EXIT_VIOLATION
                    print(f"[{i}] !! negative control did not trip")
            elif not rep.passed:
                status = EXIT_VIOLATION
        all_reports.append({"polygon": i, "reports": [r.to_json() for r in reports]})
    if args.json:
        _emit({"schema": "verify/1", "profile": args.profile,
               "seed": args.seed, "runs": all_reports}, args.json)
    print("RESULT:", "PASS" if status == EXIT_OK else "FAIL")
    return status


def cmd_quasi(args) -> int:
    poly = _load_polygon(args.polygon)
    model = BilliardModel(poly)
    quasi = quasi_analyze(model.system)
    doc = {
        "schema": "quasi/1",
        "areas": [scalar_to_json(a) for a in quasi.areas],
        "quasirational": quasi.quasirational,
    }
    status = EXIT_OK
    if quasi.quasirational:
        doc["D"] = scalar_to_json(quasi.D)
        doc["D_j"] = list(quasi.D_int)
        rep = check_necklace_invariance(model, m=args.m, samples=24, seed=args.seed)
        doc["invariance"] = rep.to_json()
        if not rep.passed:
            status = EXIT_VIOLATION
        if args.certify:
            p = _parse_point(args.certify)
            try:
                bounded, radius = boundedness_certificate(
                    model.system, quasi, p, args.m)
                doc["certificate"] = {"bounded": bounded,
                                      "radius_l1": scalar_to_json(radius)}
            except Exception as exc:
                doc["certificate"] = {"error": str(exc)}
                status = EXIT_UNDEFINED
    _emit(doc)
    return status


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="outerbilliards",
        description="Exact outer billiards, pinwheel dynamics, and verification")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a polygon file")
    p.add_argument("polygon")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("partition", help="emit the forward partition")
    p.add_argument("polygon")
    p.add_argument("--svg")
    p.add_argument("--json")
    p.add_argument("--backward", action="store_true")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("classify", help="classify a point into its tile")
    p.add_argument("polygon")
    p.add_argument("--point", required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("orbit", help="iterate a map with an event log")
    p.add_argument("polygon")
    p.add_argument("--point", required=True)
    p.add_argument("--map", default="psi",
                   choices=["psi", "psistar", "exit", "return", "stripreturn"])
    p.add_argument("--steps", type=int, default=100)
    p.add_argument("--escape")
    p.add_argument("--svg")
    p.add_argument("--json")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("polygon", nargs="?")
    p.add_argument("--random", help="'n=K count=M' generated polygons")
    p.add_argument("--profile", default="quick", choices=["quick", "full"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, help="override per-check sample counts")
    p.add_argument("--json")
    p.add_argument("--negative-controls", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("quasi", help="quasirationality and necklace checks")
    p.add_argument("polygon")
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--certify", help="point x,y to certify bounded")
    p.set_defaults(func=cmd_quasi)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
