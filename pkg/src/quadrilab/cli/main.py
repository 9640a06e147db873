"""Command-line front end.  Every command is a thin wrapper over the library.

Exit codes: 0 ok, 2 usage error, 3 parse error, 4 domain error.  Errors
print one line ``quadrilab: error code=<n> kind=<Class> message=<json string>``
on stderr.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
import warnings

import numpy as np

from .. import archimedes as arch
from ..canonical import classify, reduce
from ..core import DEFAULT_TOL, Ellipse3, Plane3, Tolerance
from ..errors import GeometryError, ParseError
from ..ruled import (line_residual, revolution_hyperboloid, rulings_through_point,
                     wren_construction)
from ..samples import emit_samples, max_residual
from ..sections import circular_section_planes, parallel_sections_report, plane_section
from ..spectral import LineOfCenters, PlaneOfCenters, UniquePoint, center
from ..tangency import (axis_ray_classification, monge_sphere, perpendicular_tangent_triple,
                        plane_touches_at_one_point, tangent_plane)
from .parser import format_quadric, parse_quadric
from .report import Report, tolerance_block

EXIT_USAGE, EXIT_PARSE, EXIT_DOMAIN = 2, 3, 4


class UsageError(Exception):
    pass


class _ArgParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _floats(text: str, n: int | None = None, name: str = "value"):
    try:
        vals = [float(s) for s in text.split(",")]
    except ValueError:
        raise UsageError(f"{name} must be comma-separated numbers, got {text!r}") from None
    if n is not None and len(vals) != n:
        raise UsageError(f"{name} needs {n} numbers, got {len(vals)}")
    return vals


def _plane(text: str) -> Plane3:
    A, B, C, D = _floats(text, 4, "--plane")
    try:
        return Plane3.from_coefficients(A, B, C, D)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _conic_payload(sec):
    out = {"class": sec.cls, "coefficients": list(sec.coeffs),
           "frame": {"origin": sec.origin, "e1": sec.e1, "e2": sec.e2}}
    g = sec.geometry
    if g.center is not None:
        out["center"] = sec.center3
    if g.semi_axes:
        out["semi_axes"] = list(g.semi_axes)
        out["axes"] = [sec.lift_dir(a) for a in g.axes]
    if g.latus is not None:
        out["latus"] = g.latus
        out["axis"] = sec.lift_dir(g.axes[0])
    if g.lines:
        out["lines"] = [{"point": sec.lift(*p), "direction": sec.lift_dir(d)}
                        for p, d in g.lines]
    return out


# -- commands ----------------------------------------------------------------

def cmd_classify(args, q, tol):
    cls = classify(q, tol)
    return Report("classify", str(cls), result={"class": cls})


def cmd_reduce(args, q, tol):
    cf = reduce(q, tol)
    res = {"class": cf.cls, "axes": list(cf.axes), "params": list(cf.params),
           "motion": cf.motion, "origin": cf.origin,
           "canonical": format_quadric(cf.quadric)}
    return Report("reduce", str(cf.cls), result=res)


def cmd_center(args, q, tol):
    c = center(q, tol)
    res = {"kind": type(c).__name__}
    if isinstance(c, UniquePoint):
        res["point"] = c.point
    elif isinstance(c, LineOfCenters):
        res.update(point=c.point, direction=c.direction)
    elif isinstance(c, PlaneOfCenters):
        res.update(point=c.point, normal=c.normal)
    return Report("center", res["kind"], result=res)


def cmd_section(args, q, tol):
    sec = plane_section(q, _plane(args.plane), tol)
    resid = {}
    if sec.cls.value not in ("Point", "Empty", "WholePlane"):
        resid["max_sample_residual"] = max_residual(q, sec.sample(args.samples))
    return Report("section", str(sec.cls), result=_conic_payload(sec), residuals=resid)


def cmd_parallel(args, q, tol):
    n = _floats(args.normal, 3, "--normal")
    offs = _floats(args.offsets, None, "--offsets")
    rep = parallel_sections_report(q, n, offs, tol)
    res = {"direction": rep.direction, "offsets": list(rep.offsets),
           "classes": [s.cls for s in rep.sections],
           "degenerate_offsets": list(rep.degenerate_offsets),
           "invariant": {"kind": rep.invariant.kind, "ratio": rep.invariant.ratio},
           "all_similar": rep.all_similar}
    return Report("parallel-sections", "similar" if rep.all_similar else "not similar",
                  result=res, residuals={"quadratic_deviation": rep.quadratic_deviation})


def cmd_circular(args, q, tol):
    fam = circular_section_planes(q, tol)
    res = {"kind": fam.kind, "center": fam.center, "normals": list(fam.normals),
           "center_lines": list(fam.center_lines)}
    return Report("circular", f"{fam.kind} ({len(fam.normals)} families)", result=res)


def cmd_rulings(args, q, tol):
    cf = reduce(q, tol)
    rp = rulings_through_point(cf, _floats(args.point, 3, "--point"), tol)
    res = {"class": cf.cls, "families": dict(zip(rp.labels, rp.lines))}
    resid = {lab: line_residual(q, ln) for lab, ln in zip(rp.labels, rp.lines)}
    return Report("rulings", "2 lines", result=res, residuals=resid)


def cmd_wren(args, q, tol):
    w = wren_construction(args.a, args.b, args.z0)
    hq = revolution_hyperboloid(args.a, args.b)
    res = {"N": w.N, "G": w.G, "H": w.H, "GH": w.gh, "asymptote": w.asymptote,
           "line": w.line, "surface": format_quadric(hq)}
    ang = float(np.linalg.norm(np.cross(w.line.u, w.asymptote)))
    return Report("wren", f"GH = {w.gh!r}", result=res,
                  residuals={"line_on_surface": line_residual(hq, w.line),
                             "asymptote_angle": ang})


def cmd_tangent(args, q, tol):
    if args.plane:
        rep = plane_touches_at_one_point(q, _plane(args.plane), tol)
        res = {"contact": rep.contact, "plane": rep.plane, "unique": rep.unique,
               "axis_plane_perpendicular": rep.axis_plane_perpendicular}
        resid = {"contact": rep.residual}
        if rep.axis_plane_residual is not None:
            resid["axis_plane"] = rep.axis_plane_residual
        return Report("tangent", "tangent at one point", result=res, residuals=resid)
    p = _floats(args.point, 3, "--point")
    pl = tangent_plane(q, p, tol)
    res = {"plane": pl}
    if args.rays:
        labels = axis_ray_classification(reduce(q, tol), p, tol)
        res["rays"] = {"outside": labels.outside, "inside": labels.inside,
                       "samples_checked": labels.samples_checked}
    return Report("tangent", "tangent plane", result=res,
                  residuals={"point": abs(pl.signed_distance(p))})


def cmd_monge(args, q, tol):
    sph = monge_sphere(q, tol)
    tri = perpendicular_tangent_triple(q, args.seed, tol=tol)
    dist = float(np.linalg.norm(tri.point - sph.center))
    res = {"center": sph.center, "radius": sph.radius, "seed": args.seed,
           "triple": {"planes": list(tri.planes), "point": tri.point}}
    return Report("monge", f"radius {sph.radius!r}", result=res,
                  residuals={"triple_distance": abs(dist - sph.radius) / sph.radius})


def cmd_cone_ellipse(args, q, tol):
    e = Ellipse3.in_xy(args.a, args.b)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        if args.apex:
            c = arch.cone_through_ellipse_oblique(e, _floats(args.apex, 3, "--apex"))
        else:
            if args.h is None:
                raise UsageError("cone-ellipse needs --h or --apex")
            c = arch.cone_through_ellipse_perpendicular(e, args.h)
    res = {"branch": c.branch, "vertex": c.cone.vertex, "cone": format_quadric(c.cone.quadric),
           "base": {"center": c.base_center, "axes": list(c.base_axes),
                    "semi_axes": list(c.base_semi)},
           "chord": list(c.chord), "circular_input": c.circular_input or bool(caught)}
    return Report("cone-ellipse", c.branch, result=res,
                  residuals={"ellipse_on_cone": c.residual})


def _verdict_report(name, v):
    res = {"predicted": v.predicted, "observed": _conic_payload(v.observed),
           "class_ok": v.class_ok, "axis_ok": v.axis_ok, "similar": v.similar,
           "flags": list(v.flags), "ok": v.ok}
    resid = {"axis_location": v.axis_residual}
    checks = {}
    for k, val in v.residuals.items():
        (checks if isinstance(val, bool) or k.endswith("_ok") else resid)[k] = val
    res["checks"] = checks
    return Report(name, "PASS" if v.ok else "FAIL", result=res, residuals=resid)


def cmd_cs11(args, q, tol):
    try:
        spec = arch.ConoidSpec(args.kind, tuple(_floats(args.params)), args.sheets)
    except ValueError as e:
        if isinstance(e, GeometryError):
            raise
        raise UsageError(str(e)) from None
    return _verdict_report("verify-cs11", arch.verify_cs11(spec, _plane(args.plane),
                                                           args.clause, tol))


def cmd_cs12(args, q, tol):
    spec = arch.ConoidSpec.ortoconoide(args.N)
    return _verdict_report("verify-cs12", arch.verify_cs12(spec, _plane(args.plane), tol))


def cmd_cs13(args, q, tol):
    spec = arch.ConoidSpec.ambliconoide(args.a, args.b)
    return _verdict_report("verify-cs13", arch.verify_cs13(spec, _plane(args.plane), tol))


def cmd_samples(args, q, tol):
    if args.plane:
        obj = plane_section(q, _plane(args.plane), tol)
    elif args.point:
        obj = rulings_through_point(reduce(q, tol), _floats(args.point, 3, "--point"), tol).a
    else:
        obj = q
    pts = emit_samples(obj, args.samples, tol)
    worst = max_residual(q, pts)
    if worst >= tol.residual_eps:
        raise GeometryError(f"sample residual {worst!r} exceeds tolerance")
    return pts


def format_csv(pts) -> str:
    rows = ["x,y,z"]
    for p in pts:
        rows.append(",".join(format(float(v) + 0.0, ".17g") for v in p))
    return "\n".join(rows) + "\n"


COMMANDS = {
    "classify": (cmd_classify, True),
    "reduce": (cmd_reduce, True),
    "center": (cmd_center, True),
    "section": (cmd_section, True),
    "parallel-sections": (cmd_parallel, True),
    "circular": (cmd_circular, True),
    "rulings": (cmd_rulings, True),
    "wren": (cmd_wren, False),
    "tangent": (cmd_tangent, True),
    "monge": (cmd_monge, True),
    "cone-ellipse": (cmd_cone_ellipse, False),
    "verify-cs11": (cmd_cs11, False),
    "verify-cs12": (cmd_cs12, False),
    "verify-cs13": (cmd_cs13, False),
    "samples": (cmd_samples, True),
}


def build_parser() -> argparse.ArgumentParser:
    common = _ArgParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--tol", type=float, default=None,
                        help="override the residual tolerance")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=16)

    p = _ArgParser(prog="quadrilab", description="Quadric surfaces and their sections.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_ArgParser)
    for name, (_, needs_expr) in COMMANDS.items():
        sp = sub.add_parser(name, parents=[common])
        if needs_expr:
            sp.add_argument("expr", help="quadric, e.g. 'x^2 + y^2 - z^2 = 1'")
        if name in ("section", "verify-cs11", "verify-cs12", "verify-cs13"):
            sp.add_argument("--plane", required=True, help="A,B,C,D for Ax+By+Cz=D")
        if name == "parallel-sections":
            sp.add_argument("--normal", required=True)
            sp.add_argument("--offsets", default="-0.5,0,0.5")
        if name in ("rulings",):
            sp.add_argument("--point", required=True)
        if name == "tangent":
            sp.add_argument("--point")
            sp.add_argument("--plane")
            sp.add_argument("--rays", action="store_true",
                            help="label the axis-parallel rays (conoids of revolution)")
        if name == "samples":
            sp.add_argument("--plane", help="sample the section by this plane")
            sp.add_argument("--point", help="sample the family-A ruling through this point")
        if name == "wren":
            sp.add_argument("--a", type=float, required=True)
            sp.add_argument("--b", type=float, required=True)
            sp.add_argument("--z0", type=float, default=0.0)
        if name == "cone-ellipse":
            sp.add_argument("--a", type=float, required=True)
            sp.add_argument("--b", type=float, required=True)
            sp.add_argument("--h", type=float)
            sp.add_argument("--apex")
        if name == "verify-cs11":
            sp.add_argument("--kind", required=True, choices=[k.value for k in arch.ConoidKind])
            sp.add_argument("--params", required=True)
            sp.add_argument("--sheets", type=int, default=2)
            sp.add_argument("--clause", required=True, choices=("axial", "parallel", "vertex"))
        if name == "verify-cs12":
            sp.add_argument("--N", type=float, required=True)
        if name == "verify-cs13":
            sp.add_argument("--a", type=float, required=True)
            sp.add_argument("--b", type=float, required=True)
    return p


def _diagnostic(code, exc) -> str:
    return (f"quadrilab: error code={code} kind={type(exc).__name__} "
            f"message={json.dumps(str(exc))}")


def run(argv, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        if args.command == "tangent" and not (args.point or args.plane):
            raise UsageError("tangent needs --point or --plane")
        if args.samples < 2:
            raise UsageError("--samples must be at least 2")
        tol = DEFAULT_TOL
        if args.tol is not None:
            try:
                tol = dataclasses.replace(DEFAULT_TOL, residual_eps=args.tol)
            except ValueError as e:
                raise UsageError(str(e)) from None
        fn, needs_expr = COMMANDS[args.command]
        q = parse_quadric(args.expr) if needs_expr else None
        result = fn(args, q, tol)
    except UsageError as e:
        print(_diagnostic(EXIT_USAGE, e), file=err)
        return EXIT_USAGE
    except ParseError as e:
        print(_diagnostic(EXIT_PARSE, e), file=err)
        return EXIT_PARSE
    except (GeometryError, ValueError) as e:
        print(_diagnostic(EXIT_DOMAIN, e), file=err)
        return EXIT_DOMAIN
    if isinstance(result, np.ndarray):
        out.write(format_csv(result))
        return 0
    if q is not None:
        result.input = args.expr
        result.normalized = format_quadric(q)
    result.tolerance = tolerance_block(tol)
    out.write(result.to_json() if args.format == "json" else result.to_text())
    return 0


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
