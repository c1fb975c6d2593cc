"""Command line front end.

Subcommands: ``info``, ``derive``, ``verify``, ``render``, ``fuzz``.
Exit codes: 0 ok, 2 unparseable input, 3 geometrically invalid curve,
4 usage, 5 verification failure, 6 I/O failure.
All machine output is JSON on stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__
from .checks import invariant_battery
from .derived import (CWMS, SMS, WIGNER, DerivedKind, PointSet,
                      derived_report, equidistant, verify_identities)
from .oval import NotAnOval, OvalSpec, geometry_summary, random_oval, validate_oval
from .parametric import NotRegular, ParametricCurve, sms_parametric, sms_point
from .stability import stability_report
from .svgplot import render_svg
from .trigpoly import TAU, TrigPoly

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NOT_OVAL = 3
EXIT_USAGE = 4
EXIT_VERIFY = 5
EXIT_IO = 6

VERIFY_REL_TOL = 1e-9
PARAMETRIC_REL_TOL = 1e-8


class SpecFileError(ValueError):
    """The curve-spec file does not match the expected schema."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _load_file(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_IO)
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecFileError(f"invalid JSON: {exc}")
    if not isinstance(obj, dict):
        raise SpecFileError("top level must be an object")
    return obj


def parse_spec(obj: dict):
    """Parse a curve-spec object into ('support', OvalSpec) or ('parametric', curve)."""
    kind = obj.get("kind")
    if kind == "support":
        try:
            p = TrigPoly.from_json_dict(obj)
        except (TypeError, ValueError) as exc:
            raise SpecFileError(f"bad support series: {exc}")
        return "support", validate_oval(p)
    if kind == "parametric":
        try:
            x = TrigPoly.from_json_dict(obj["x"])
            y = TrigPoly.from_json_dict(obj["y"])
            orientation = int(obj.get("orientation", 1))
        except (KeyError, TypeError, ValueError) as exc:
            raise SpecFileError(f"bad parametric spec: {exc}")
        return "parametric", ParametricCurve(x, y, orientation)
    raise SpecFileError(f"unknown curve kind {kind!r}")


def _load_spec(path: str):
    try:
        obj = _load_file(path)
        kind, curve = parse_spec(obj)
    except SpecFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)
    except NotAnOval as exc:
        print(f"error: NotAnOval(rho_min={exc.rho_min!r})", file=sys.stderr)
        raise SystemExit(EXIT_NOT_OVAL)
    except NotRegular as exc:
        print(f"error: NotRegular: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_NOT_OVAL)
    return obj, kind, curve


def _envelope(command: str, input_obj, report: dict, **extra) -> dict:
    payload = {"command": command, "version": __version__, "input": input_obj,
               "report": report}
    payload.update(extra)
    return payload


# -- subcommands ---------------------------------------------------------


def cmd_info(args) -> int:
    obj, kind, curve = _load_spec(args.file)
    if kind == "support":
        report = geometry_summary(curve).to_json_dict()
    else:
        rep = sms_parametric(curve, samples=8)
        report = {"length": rep.length, "area": rep.area}
    _emit(_envelope("info", obj, report))
    return EXIT_OK


_SET_NAMES = {"wigner": WIGNER, "cwms": CWMS, "sms": SMS}


def cmd_derive(args) -> int:
    obj, kind, curve = _load_spec(args.file)
    if kind != "support":
        print("error: derive needs a support-kind file", file=sys.stderr)
        return EXIT_USAGE
    if args.set == "equidistant":
        if args.lam is None:
            print("error: --lambda is required for equidistant", file=sys.stderr)
            return EXIT_USAGE
        dkind: DerivedKind = equidistant(args.lam)
    else:
        if args.lam is not None:
            print("error: --lambda only applies to equidistant", file=sys.stderr)
            return EXIT_USAGE
        dkind = _SET_NAMES[args.set]
    try:
        report = derived_report(curve, dkind).to_json_dict()
    except PointSet as exc:
        report = {"degenerate": "point", "point": list(exc.point)}
    _emit(_envelope("derive", obj, report))
    return EXIT_OK


def cmd_verify(args) -> int:
    obj, kind, curve = _load_spec(args.file)
    if kind == "parametric":
        if args.stability:
            print("error: --stability needs a support-kind file", file=sys.stderr)
            return EXIT_USAGE
        rep = sms_parametric(curve)
        _emit(_envelope("verify", obj, rep.to_json_dict()))
        return EXIT_OK if rep.equality_residual <= PARAMETRIC_REL_TOL else EXIT_VERIFY
    ident = verify_identities(curve)
    report = {"identities": ident.to_json_dict()}
    ok = ident.passes(VERIFY_REL_TOL)
    if args.stability:
        stab = stability_report(curve)
        report["stability"] = stab.to_json_dict()
        ok = ok and stab.min_slack() >= -VERIFY_REL_TOL * curve.length ** 2
    _emit(_envelope("verify", obj, report))
    return EXIT_OK if ok else EXIT_VERIFY


def _support_polyline(q: TrigPoly, n: int) -> np.ndarray:
    th = np.linspace(0.0, TAU, n, endpoint=False)
    qv = q.eval(th)
    dq = q.eval(th, 1)
    pts = np.stack([qv * np.cos(th) - dq * np.sin(th),
                    qv * np.sin(th) + dq * np.cos(th)], axis=1)
    return np.vstack([pts, pts[:1]])


def _support_point(q: TrigPoly, theta: float) -> tuple[float, float]:
    qv = q.eval(theta)
    dq = q.eval(theta, 1)
    import math
    return (qv * math.cos(theta) - dq * math.sin(theta),
            qv * math.sin(theta) + dq * math.cos(theta))


def cmd_render(args) -> int:
    obj, kind, curve = _load_spec(args.file)
    if args.samples < 16:
        print("error: --samples must be at least 16", file=sys.stderr)
        return EXIT_USAGE
    sets = [s.strip() for s in args.sets.split(",") if s.strip()]
    polylines = []
    markers = []
    if kind == "support":
        allowed = {"m", "wigner", "cwms", "sms"}
        if not sets or any(s not in allowed for s in sets):
            print(f"error: sets must be from {sorted(allowed)}", file=sys.stderr)
            return EXIT_USAGE
        for name in sets:
            if name == "m":
                polylines.append(("m", _support_polyline(curve.p, args.samples)))
                continue
            try:
                rep = derived_report(curve, _SET_NAMES[name])
            except PointSet as exc:
                markers.append((exc.point[0], exc.point[1], "center"))
                continue
            polylines.append((name, _support_polyline(rep.support, args.samples)))
            for ang in rep.cusp_angles.angles:
                px, py = _support_point(rep.support, ang)
                markers.append((px, py, "cusp"))
    else:
        allowed = {"m", "sms"}
        if not sets or any(s not in allowed for s in sets):
            print(f"error: parametric sets must be from {sorted(allowed)}",
                  file=sys.stderr)
            return EXIT_USAGE
        rep = sms_parametric(curve)
        radius = rep.length / TAU
        t = np.linspace(0.0, TAU, args.samples, endpoint=False)
        for name in sets:
            if name == "m":
                px, py = curve.point(t)
                pts = np.stack([px, py], axis=1)
                polylines.append(("m", np.vstack([pts, pts[:1]])))
            else:
                if rep.sms_degenerate:
                    sx, sy = sms_point(curve, 0.0, radius)
                    markers.append((float(sx), float(sy), "center"))
                    continue
                sx, sy = sms_point(curve, t, radius)
                pts = np.stack([sx, sy], axis=1)
                polylines.append(("sms", np.vstack([pts, pts[:1]])))
                for tp in rep.singular_params.angles:
                    qx, qy = sms_point(curve, tp, radius)
                    markers.append((float(qx), float(qy), "cusp"))
    svg = render_svg(polylines, markers)
    try:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(svg)
    except OSError as exc:
        print(f"error: cannot write {args.output}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def cmd_fuzz(args) -> int:
    if args.count < 1:
        print("error: --count must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    if not 1 <= args.degree <= 16:
        print("error: --degree must be in 1..16", file=sys.stderr)
        return EXIT_USAGE
    rng = np.random.default_rng(args.seed)
    failures = []
    passed = 0
    for case in range(args.count):
        oval = random_oval(rng, degree=args.degree,
                           min_degree=min(3, args.degree))
        bad = [c for c in invariant_battery(oval) if not c.ok]
        if bad:
            failures.append({
                "case": case,
                "a0": oval.p.a0,
                "terms": [[n, a, b] for n, a, b in oval.p.terms],
                "failed": [c.to_json_dict() for c in bad],
            })
            print(f"case {case} failed: {[c.name for c in bad]} "
                  f"coefficients a0={oval.p.a0!r} terms={oval.p.terms!r}",
                  file=sys.stderr)
        else:
            passed += 1
    report = {"cases": args.count, "passed": passed,
              "failed": len(failures), "failures": failures}
    _emit(_envelope("fuzz", None, report, seed=args.seed,
                    count=args.count, degree=args.degree))
    return EXIT_OK if not failures else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ovalcaustics", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_info = sub.add_parser("info", help="geometry summary of a curve-spec file")
    p_info.add_argument("file")
    p_info.set_defaults(func=cmd_info)

    p_derive = sub.add_parser("derive", help="derived-set report")
    p_derive.add_argument("file")
    p_derive.add_argument("--set", required=True,
                          choices=["wigner", "cwms", "sms", "equidistant"])
    p_derive.add_argument("--lambda", dest="lam", type=float, default=None)
    p_derive.set_defaults(func=cmd_derive)

    p_verify = sub.add_parser("verify", help="check the area identities and bounds")
    p_verify.add_argument("file")
    p_verify.add_argument("--stability", action="store_true")
    p_verify.set_defaults(func=cmd_verify)

    p_render = sub.add_parser("render", help="write an SVG of selected sets")
    p_render.add_argument("file")
    p_render.add_argument("--sets", default="m")
    p_render.add_argument("--samples", type=int, default=2048)
    p_render.add_argument("-o", "--output", required=True)
    p_render.set_defaults(func=cmd_render)

    p_fuzz = sub.add_parser("fuzz", help="seeded random invariant sweep")
    p_fuzz.add_argument("--seed", type=int, default=0)
    p_fuzz.add_argument("--count", type=int, default=100)
    p_fuzz.add_argument("--degree", type=int, default=8)
    p_fuzz.set_defaults(func=cmd_fuzz)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else EXIT_USAGE
        return code


if __name__ == "__main__":
    sys.exit(main())
