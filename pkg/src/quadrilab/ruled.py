"""Rulings of the doubly ruled quadrics and Wren's construction."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .canonical import QC, CanonicalForm
from .core import (DEFAULT_TOL, Line3, Plane3, Quadric, Tolerance, fit_quadric,
                   line_distance, relative_residual, unit)
from .errors import NonPositiveParameter, NoRealBeta, NotOnSurface, NotRuled
from .sections import CC, PlanarConic, plane_section

LINE_SAMPLES = 20
RULED_CLASSES = (QC.HyperboloidOneSheet, QC.HyperbolicParaboloid)


@dataclass(frozen=True)
class RulingPair:
    lines: tuple            # (family A, family B)
    labels: tuple = ("A", "B")

    @property
    def a(self) -> Line3:
        return self.lines[0]

    @property
    def b(self) -> Line3:
        return self.lines[1]


def _hyp1_direction(axes, pc, s):
    a, b, c = axes
    X, Y, Z = pc[0] / a, pc[1] / b, pc[2] / c
    r2 = X * X + Y * Y
    dX = (Z * X - s * Y) / r2
    dY = (Z * Y + s * X) / r2
    return np.array([a * dX, b * dY, c])


def _hpar_direction(params, pc, s):
    P, P1 = params
    X, Y = pc[0] * math.sqrt(P), pc[1] * math.sqrt(P1)
    if s > 0:
        return np.array([0.5 / math.sqrt(P), 0.5 / math.sqrt(P1), X - Y])
    return np.array([0.5 / math.sqrt(P), -0.5 / math.sqrt(P1), X + Y])


def rulings_through_point(cf: CanonicalForm, p, tol: Tolerance = DEFAULT_TOL) -> RulingPair:
    """The two lines of the surface through p, built in canonical coordinates.

    Family A is the s = +1 branch of the factorisation, B the s = -1 branch.
    """
    if cf.cls not in RULED_CLASSES:
        raise NotRuled(f"{cf.cls} is not doubly ruled")
    p = np.asarray(p, dtype=float)
    if relative_residual(cf.source, p) > tol.residual_eps:
        raise NotOnSurface("point is not on the surface")
    pc = cf.to_canonical(p)
    lines = []
    for s in (1.0, -1.0):
        if cf.cls is QC.HyperboloidOneSheet:
            d = _hyp1_direction(cf.axes, pc, s)
        else:
            d = _hpar_direction(cf.params, pc, s)
        lines.append(Line3.through(p, cf.to_original.apply_direction(d)))
    return RulingPair(tuple(lines))


def line_residual(q: Quadric, line: Line3, n: int = LINE_SAMPLES, span: float = 2.0) -> float:
    """Max relative residual of q over n samples of the line."""
    return max(relative_residual(q, x) for x in line.sample(n, span))


@dataclass(frozen=True)
class WrenConstruction:
    N: np.ndarray           # throat point
    G: np.ndarray           # point of the asymptote at height z0
    H: np.ndarray           # G moved by a perpendicular to the asymptote plane
    gh: float
    asymptote: np.ndarray
    line: Line3


def wren_construction(a: float, b: float, z0: float) -> WrenConstruction:
    """Line on (x^2+y^2)/a^2 - z^2/b^2 = 1 through N = (0, a, 0).

    The asymptote of the meridian hyperbola in the xz-plane is carried
    across to N; its point H above G = (a z0 / b, 0, z0) satisfies
    OH^2 - OG^2 = a^2, so GH equals the throat radius.
    """
    if not (a > 0 and b > 0):
        raise NonPositiveParameter("a and b must be positive")
    w = unit([a, 0.0, b])
    N = np.array([0.0, a, 0.0])
    G = np.array([a * z0 / b, 0.0, z0])
    H = G + np.array([0.0, a, 0.0])
    return WrenConstruction(N, G, H, float(np.linalg.norm(H - G)), w,
                            Line3(H, w))


def wren_generator(a: float, b: float, z0: float) -> Line3:
    return wren_construction(a, b, z0).line


def revolution_hyperboloid(a: float, b: float) -> Quadric:
    return Quadric(a=1 / a**2, a1=1 / a**2, a2=-1 / b**2, k=1.0)


def line_pair_beta(P: float, P1: float, alpha: float) -> float:
    """beta with y = alpha x + beta tangent to the asymptotic cone of
    P x^2 + P' y^2 - P'' z^2 = 1, i.e. beta^2 = (P + alpha^2 P') / (P P')."""
    disc = (P + alpha * alpha * P1) / (P * P1)
    if not (math.isfinite(disc) and disc > 0):
        raise NoRealBeta(f"no real beta for alpha={alpha}")
    return math.sqrt(disc)


def plane_section_line_pair(cf: CanonicalForm, alpha: float,
                            tol: Tolerance = DEFAULT_TOL) -> tuple[float, PlanarConic]:
    """beta and the section of the plane y = alpha x + beta (canonical coordinates)."""
    if cf.cls is not QC.HyperboloidOneSheet:
        raise NotRuled(f"{cf.cls} is not a one-sheet hyperboloid")
    a, b, _ = cf.axes
    beta = line_pair_beta(1 / a**2, 1 / b**2, float(alpha))
    n = np.array([-alpha, 1.0, 0.0])
    s = np.linalg.norm(n)
    pl = Plane3(n / s, beta / s).moved(cf.to_original)
    sec = plane_section(cf.source, pl, tol)
    if sec.cls is not CC.TwoLines:
        raise AssertionError(f"expected a line pair, got {sec.cls}")
    return beta, sec


def surface_from_lines(lines, span: float = 1.0) -> Quadric:
    """Quadric through three mutually skew lines (3 samples on each)."""
    if len(lines) != 3:
        raise ValueError("need exactly three lines")
    pts = np.vstack([ln.sample(3, span) for ln in lines])
    return fit_quadric(pts)


def skew(l1: Line3, l2: Line3, eps: float = 1e-9) -> bool:
    """Neither parallel nor meeting."""
    return (np.linalg.norm(np.cross(l1.u, l2.u)) > eps
            and line_distance(l1, l2) > eps)
