"""Tangent planes and tangency checks on conoids; the director sphere of an ellipsoid."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .canonical import QC, CanonicalForm, reduce, revolution_axis
from .core import (DEFAULT_TOL, Plane3, Quadric, Tolerance, evaluate, gradient,
                   random_rotation, relative_residual, unit)
from .errors import (NotConoid, NotEllipsoid, NotOnSurface, NotTangent,
                     SingularPoint)
from .sections import CC, plane_section

RAY_SAMPLES = tuple(0.1 * i for i in range(1, 21))


def tangent_plane(q: Quadric, p, tol: Tolerance = DEFAULT_TOL) -> Plane3:
    """Plane through p normal to the gradient.  Raises on off-surface or singular p."""
    p = np.asarray(p, dtype=float)
    if relative_residual(q, p) > tol.residual_eps:
        raise NotOnSurface(f"point {p.tolist()} is not on the surface")
    g = gradient(q, p)
    if np.linalg.norm(g) <= tol.residual_eps * q.scale() * (1.0 + np.linalg.norm(p)):
        raise SingularPoint(f"gradient vanishes at {p.tolist()}")
    return Plane3.through(p, g)


@dataclass(frozen=True)
class RayLabels:
    outside: np.ndarray | None
    inside: np.ndarray | None
    samples_checked: int


def _interior_sign(cf: CanonicalForm) -> float:
    """Sign of the canonical equation on the concave (axis) side."""
    if cf.cls is QC.HyperboloidTwoSheets:
        return 1.0
    return -1.0


def _first_crossing(f0_slope, curv):
    # f(t) = slope t + curv t^2 ; second root at -slope/curv when it lies ahead
    if curv != 0.0 and -f0_slope / curv > 0:
        return -f0_slope / curv
    return math.inf


def axis_ray_classification(cf: CanonicalForm, p,
                            tol: Tolerance = DEFAULT_TOL) -> RayLabels:
    """Label the two rays from p parallel to the axis as falling outside or
    inside the conoid (just beyond p)."""
    if cf.cls not in (QC.EllipticParaboloid, QC.HyperboloidOneSheet, QC.HyperboloidTwoSheets) \
            or revolution_axis(cf) is None:
        raise NotConoid(f"{cf.cls} is not a conoid of revolution")
    p = np.asarray(p, dtype=float)
    if relative_residual(cf.source, p) > tol.residual_eps:
        raise NotOnSurface("point is not on the conoid")
    qc = cf.quadric
    pc = cf.to_canonical(p)
    w = np.array([0.0, 0.0, 1.0])
    inside_sign = _interior_sign(cf)
    labels = {}
    checked = 0
    for sgn in (1.0, -1.0):
        d = sgn * w
        slope = float(gradient(qc, pc) @ d)
        curv = float(d @ qc.quadratic_matrix() @ d)
        lead = slope if slope != 0.0 else curv
        if abs(slope) <= tol.residual_eps * qc.scale() * (1 + np.linalg.norm(pc)):
            lead = curv
        label = "inside" if lead * inside_sign > 0 else "outside"
        limit = _first_crossing(slope, curv)
        for t in RAY_SAMPLES:
            if t >= limit:
                break
            val = evaluate(qc, pc + t * d)
            got = "inside" if val * inside_sign > 0 else "outside"
            if got != label:
                raise AssertionError("ray sign sampling disagrees with the local label")
            checked += 1
        labels.setdefault(label, []).append(cf.axis_direction(2) * sgn)
    out = labels.get("outside", [None])[0]
    ins = labels.get("inside", [None])[0]
    return RayLabels(out, ins, checked)


@dataclass(frozen=True)
class TangencyReport:
    contact: np.ndarray
    plane: Plane3
    residual: float
    unique: bool
    axis_plane_perpendicular: bool | None = None
    axis_plane_residual: float | None = None


def plane_touches_at_one_point(q: Quadric, pl: Plane3,
                               tol: Tolerance = DEFAULT_TOL) -> TangencyReport:
    sec = plane_section(q, pl, tol)
    if sec.cls is not CC.Point:
        raise NotTangent(f"plane meets the surface in a {sec.cls}, not a single point",
                         sec.cls)
    contact = sec.center3
    resid = abs(evaluate(q, contact))
    # the rest of the plane lies strictly on one side
    cu, cv = sec.geometry.center
    vals = [sec.value(cu + du, cv + dv) for du in np.linspace(-2, 2, 9)
            for dv in np.linspace(-2, 2, 9) if (du, dv) != (0.0, 0.0)]
    unique = all(v > 0 for v in vals) or all(v < 0 for v in vals)
    perp = perp_res = None
    cf = reduce(q, tol)
    axis = revolution_axis(cf)
    if axis is not None:
        off = contact - axis.p0
        m = np.cross(axis.u, off)
        if np.linalg.norm(m) <= 1e-12 * (1 + np.linalg.norm(off)):
            perp_res = 0.0      # contact on the axis: every axial plane works
        else:
            perp_res = abs(float(unit(m) @ pl.n))
        perp = perp_res < 1e-9
    return TangencyReport(contact, pl, resid, unique, perp, perp_res)


@dataclass(frozen=True)
class Sphere:
    center: np.ndarray
    radius: float


def _ellipsoid(q: Quadric, tol: Tolerance) -> CanonicalForm:
    cf = reduce(q, tol)
    if cf.cls is not QC.Ellipsoid:
        raise NotEllipsoid(f"{cf.cls} is not an ellipsoid")
    return cf


def monge_sphere(q: Quadric, tol: Tolerance = DEFAULT_TOL) -> Sphere:
    """Director sphere: centre of the ellipsoid, radius sqrt(a^2 + b^2 + c^2)."""
    cf = _ellipsoid(q, tol)
    a, b, c = cf.axes
    return Sphere(cf.origin, math.sqrt(a * a + b * b + c * c))


def support_plane(cf: CanonicalForm, normal) -> Plane3:
    """Tangent plane with outward unit normal ``normal`` (original coordinates)."""
    n = unit(normal)
    nc = cf.motion.apply_direction(n)
    a, b, c = cf.axes
    h = math.sqrt((a * nc[0]) ** 2 + (b * nc[1]) ** 2 + (c * nc[2]) ** 2)
    return Plane3(n, float(n @ cf.origin) + h)


@dataclass(frozen=True)
class PerpendicularTriple:
    planes: tuple
    point: np.ndarray
    frame: np.ndarray


def perpendicular_tangent_triple(q: Quadric, seed: int, frame=None,
                                 tol: Tolerance = DEFAULT_TOL) -> PerpendicularTriple:
    """Three mutually perpendicular tangent planes and their common point.

    The normals are the columns of ``frame`` if given, otherwise of a
    rotation drawn from a Philox stream keyed by ``seed``.
    """
    cf = _ellipsoid(q, tol)
    if frame is None:
        rng = np.random.Generator(np.random.Philox(seed))
        frame = random_rotation(rng)
    F = np.asarray(frame, dtype=float)
    planes = tuple(support_plane(cf, F[:, i]) for i in range(3))
    N = np.array([pl.n for pl in planes])
    point = np.linalg.solve(N, np.array([pl.d for pl in planes]))
    return PerpendicularTriple(planes, point, F)
