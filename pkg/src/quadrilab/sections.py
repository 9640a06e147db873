"""Plane sections of quadrics as embedded conics.

Also conic similarity and the circular-section families of central quadrics.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .canonical import QC, is_sphere, reduce
from .core import DEFAULT_TOL, Ellipse3, Line3, Plane3, Quadric, Tolerance, unit
from .errors import (DegenerateConic, InsufficientSections, NoParametrization,
                     NotCentral)

CIRCLE_RTOL = 1e-9


class ConicClass(enum.Enum):
    Ellipse = "Ellipse"
    Circle = "Circle"
    Parabola = "Parabola"
    Hyperbola = "Hyperbola"
    TwoLines = "TwoLines"
    ParallelLines = "ParallelLines"
    OneLine = "OneLine"
    Point = "Point"
    Empty = "Empty"
    WholePlane = "WholePlane"

    def __str__(self):
        return self.value


CC = ConicClass
PROPER = frozenset({CC.Ellipse, CC.Circle, CC.Parabola, CC.Hyperbola})


@dataclass(frozen=True)
class SimilarityInvariant:
    kind: str       # "ellipse", "hyperbola" or "parabola"
    ratio: float    # (b/a)^2 from the semi-axes; 0 for parabolas


@dataclass(frozen=True)
class ConicGeometry:
    """Metric data in plane coordinates (u, v).

    For central conics ``center`` is the centre and ``axes`` the unit
    principal directions paired with ``semi_axes`` (major/transverse first).
    For parabolas ``center`` is the vertex, ``axes[0]`` the opening
    direction and ``latus`` the latus rectum.
    """

    center: np.ndarray | None = None
    axes: tuple = ()
    semi_axes: tuple = ()
    latus: float | None = None
    lines: tuple = ()     # (point, direction) pairs for line classes


@dataclass(frozen=True)
class PlanarConic:
    """A u^2 + 2B uv + C v^2 + 2D u + 2E v + F = 0 in the frame (origin, e1, e2)."""

    origin: np.ndarray
    e1: np.ndarray
    e2: np.ndarray
    coeffs: tuple
    cls: ConicClass
    eps: float = DEFAULT_TOL.rank_eps

    @property
    def normal(self) -> np.ndarray:
        return np.cross(self.e1, self.e2)

    @property
    def plane(self) -> Plane3:
        return Plane3.through(self.origin, self.normal)

    def quadratic_part(self) -> np.ndarray:
        A, B, C = self.coeffs[:3]
        return np.array([[A, B], [B, C]])

    def lift(self, u, v) -> np.ndarray:
        return self.origin + u * self.e1 + v * self.e2

    def lift_dir(self, w) -> np.ndarray:
        return w[0] * self.e1 + w[1] * self.e2

    def value(self, u, v) -> float:
        A, B, C, D, E, F = self.coeffs
        return A * u * u + 2 * B * u * v + C * v * v + 2 * D * u + 2 * E * v + F

    @cached_property
    def geometry(self) -> ConicGeometry:
        return _geometry(self.coeffs, self.cls, self.eps)

    @property
    def center3(self) -> np.ndarray:
        return self.lift(*self.geometry.center)

    def axis_line(self, i: int = 0) -> Line3:
        g = self.geometry
        return Line3.through(self.center3, self.lift_dir(g.axes[i]))

    def invariant(self) -> SimilarityInvariant:
        return similarity_invariant(self)

    def sample(self, n: int) -> np.ndarray:
        """n points on the curve in 3D."""
        return np.array([self.lift(u, v) for u, v in _sample2(self, n)])

    def to_ellipse3(self) -> Ellipse3:
        if self.cls not in (CC.Ellipse, CC.Circle):
            raise DegenerateConic(f"{self.cls} is not an ellipse")
        g = self.geometry
        e_maj = self.lift_dir(g.axes[0])
        e_min = np.cross(self.normal, e_maj)
        return Ellipse3(self.center3, e_maj, e_min, g.semi_axes[0],
                        min(g.semi_axes[1], g.semi_axes[0]))


def _conic_scale(coeffs) -> float:
    A, B, C, D, E, F = coeffs
    M = np.array([[A, B, D], [B, C, E], [D, E, F]])
    return float(np.linalg.norm(M, 2))


def classify_conic(coeffs, eps: float = DEFAULT_TOL.rank_eps) -> ConicClass:
    A, B, C, D, E, F = (float(x) for x in coeffs)
    s = _conic_scale(coeffs)
    if s == 0.0:
        return CC.WholePlane
    A, B, C, D, E, F = A / s, B / s, C / s, D / s, E / s, F / s
    lam, V = np.linalg.eigh(np.array([[A, B], [B, C]]))
    nz = [i for i in range(2) if abs(lam[i]) > eps]
    lin = np.array([D, E])
    if len(nz) == 2:
        c = -np.linalg.solve(np.array([[A, B], [B, C]]), lin)
        F0 = F + lin @ c
        same = lam[0] * lam[1] > 0
        if abs(F0) <= eps:
            return CC.Point if same else CC.TwoLines
        if not same:
            return CC.Hyperbola
        if -F0 * lam[0] < 0:
            return CC.Empty
        ratio = min(abs(lam[0]), abs(lam[1])) / max(abs(lam[0]), abs(lam[1]))
        return CC.Circle if ratio >= 1.0 - CIRCLE_RTOL else CC.Ellipse
    if len(nz) == 1:
        i = nz[0]
        e, f = V[:, i], V[:, 1 - i]
        if abs(lin @ f) > eps:
            return CC.Parabola
        h = lin @ e
        F0 = F - h * h / lam[i]
        if abs(F0) <= eps:
            return CC.OneLine
        return CC.ParallelLines if -F0 / lam[i] > 0 else CC.Empty
    if np.linalg.norm(lin) > eps:
        return CC.OneLine
    return CC.Empty if abs(F) > eps else CC.WholePlane


def _geometry(coeffs, cls: ConicClass, eps: float) -> ConicGeometry:
    A, B, C, D, E, F = (float(x) for x in coeffs)
    M = np.array([[A, B], [B, C]])
    lin = np.array([D, E])
    lam, V = np.linalg.eigh(M)
    if cls in (CC.Ellipse, CC.Circle, CC.Hyperbola, CC.Point, CC.TwoLines):
        c = -np.linalg.solve(M, lin)
        F0 = F + lin @ c
        if cls in (CC.Ellipse, CC.Circle):
            semis = [math.sqrt(-F0 / l) for l in lam]
            i, j = (0, 1) if semis[0] >= semis[1] else (1, 0)
            return ConicGeometry(c, (V[:, i], V[:, j]), (semis[i], semis[j]))
        if cls is CC.Hyperbola:
            t = 0 if lam[0] * -F0 > 0 else 1
            o = 1 - t
            return ConicGeometry(c, (V[:, t], V[:, o]),
                                 (math.sqrt(-F0 / lam[t]), math.sqrt(F0 / lam[o])))
        if cls is CC.TwoLines:
            r = math.sqrt(-lam[0] / lam[1])
            d1 = unit(V[:, 0] + r * V[:, 1])
            d2 = unit(V[:, 0] - r * V[:, 1])
            return ConicGeometry(c, (V[:, 0], V[:, 1]), lines=((c, d1), (c, d2)))
        return ConicGeometry(c)
    nz = [i for i in range(2) if abs(lam[i]) > eps * _conic_scale(coeffs)]
    if cls in (CC.Parabola, CC.ParallelLines, CC.OneLine) and len(nz) == 1:
        i = nz[0]
        e, f = V[:, i], V[:, 1 - i]
        h, g = lin @ e, lin @ f
        s0 = -h / lam[i]
        if cls is CC.Parabola:
            t0 = -(F - h * h / lam[i]) / (2 * g)
            vertex = s0 * e + t0 * f
            opening = f * (1.0 if -g / lam[i] > 0 else -1.0)
            return ConicGeometry(vertex, (opening, e), latus=abs(2 * g / lam[i]))
        F0 = F - h * h / lam[i]
        if cls is CC.OneLine:
            return ConicGeometry(s0 * e, (f, e), lines=((s0 * e, f),))
        w = math.sqrt(-F0 / lam[i])
        return ConicGeometry(s0 * e, (f, e),
                             lines=(((s0 + w) * e, f), ((s0 - w) * e, f)))
    if cls is CC.OneLine:
        n2 = lin / np.linalg.norm(lin)
        p = -F / (2 * np.linalg.norm(lin)) * n2
        d = np.array([-n2[1], n2[0]])
        return ConicGeometry(p, (d, n2), lines=((p, d),))
    return ConicGeometry()


def _sample2(c: PlanarConic, n: int):
    if n < 2:
        raise ValueError("need at least two samples")
    g = c.geometry
    if c.cls in (CC.Ellipse, CC.Circle):
        a, b = g.semi_axes
        th = np.linspace(0, 2 * np.pi, n, endpoint=False)
        return [g.center + a * math.cos(t) * g.axes[0] + b * math.sin(t) * g.axes[1] for t in th]
    if c.cls is CC.Hyperbola:
        a, b = g.semi_axes
        n1 = (n + 1) // 2
        pts = []
        for sign, m in ((1.0, n1), (-1.0, n - n1)):
            for t in np.linspace(-1.5, 1.5, max(m, 1))[:m]:
                pts.append(g.center + sign * a * math.cosh(t) * g.axes[0]
                           + b * math.sinh(t) * g.axes[1])
        return pts
    if c.cls is CC.Parabola:
        L = g.latus
        return [g.center + (s * s / L) * g.axes[0] + s * g.axes[1]
                for s in np.linspace(-L, L, n)]
    if c.cls in (CC.TwoLines, CC.ParallelLines, CC.OneLine):
        pts = []
        k = len(g.lines)
        for idx in range(n):
            p, d = g.lines[idx % k]
            t = -1.0 + 2.0 * (idx // k) / max(1, (n - 1) // k)
            pts.append(p + t * d)
        return pts
    raise NoParametrization(f"{c.cls} has no curve parametrisation")


def section_frame(n) -> tuple[np.ndarray, np.ndarray]:
    """In-plane basis: e1 from the global axis least aligned with n, e2 = n x e1."""
    n = np.asarray(n, dtype=float)
    i = int(np.argmin(np.abs(n)))
    ax = np.zeros(3)
    ax[i] = 1.0
    e1 = unit(ax - (ax @ n) * n)
    return e1, np.cross(n, e1)


def plane_section(q: Quadric, pl: Plane3, tol: Tolerance = DEFAULT_TOL) -> PlanarConic:
    o = pl.foot()
    e1, e2 = section_frame(pl.n)
    Q = q.quadratic_matrix()
    w = Q @ o + q.linear()
    coeffs = (float(e1 @ Q @ e1), float(e1 @ Q @ e2), float(e2 @ Q @ e2),
              float(e1 @ w), float(e2 @ w),
              float(o @ Q @ o + 2 * q.linear() @ o - q.k))
    return PlanarConic(o, e1, e2, coeffs, classify_conic(coeffs, tol.rank_eps), tol.rank_eps)


def similarity_invariant(c: PlanarConic) -> SimilarityInvariant:
    """(b/a)^2 with a the major (ellipse) or transverse (hyperbola) semi-axis.

    Conjugate hyperbolas get reciprocal values: they are not similar.
    """
    if c.cls not in PROPER:
        raise DegenerateConic(f"{c.cls} has no similarity class")
    if c.cls is CC.Parabola:
        return SimilarityInvariant("parabola", 0.0)
    a, b = c.geometry.semi_axes
    kind = "hyperbola" if c.cls is CC.Hyperbola else "ellipse"
    return SimilarityInvariant(kind, float((b / a) ** 2))


def conic_similar(c1: PlanarConic, c2: PlanarConic, rtol: float = 1e-9) -> bool:
    """Same conic type and the same axis-ratio invariant."""
    i1, i2 = similarity_invariant(c1), similarity_invariant(c2)
    if i1.kind != i2.kind:
        return False
    return abs(i1.ratio - i2.ratio) <= rtol * max(1.0, i1.ratio, i2.ratio)


@dataclass(frozen=True)
class ParallelSectionsReport:
    direction: np.ndarray
    offsets: tuple
    sections: tuple
    degenerate_offsets: tuple
    invariant: SimilarityInvariant
    all_similar: bool
    quadratic_deviation: float


def parallel_sections_report(q: Quadric, direction, offsets,
                             tol: Tolerance = DEFAULT_TOL) -> ParallelSectionsReport:
    n = unit(direction)
    offs = tuple(sorted(float(d) for d in offsets))
    sections = tuple(plane_section(q, Plane3(n, d), tol) for d in offs)
    good = [s for s in sections if s.cls in PROPER]
    bad = tuple(d for d, s in zip(offs, sections) if s.cls not in PROPER)
    if len(good) < 2:
        raise InsufficientSections(f"only {len(good)} non-degenerate section(s)")
    ref = good[0]
    similar = all(conic_similar(ref, s) for s in good[1:])
    dev = max(float(np.max(np.abs(s.quadratic_part() - ref.quadratic_part())))
              for s in sections)
    return ParallelSectionsReport(n, offs, sections, bad, similarity_invariant(ref),
                                  similar, dev)


@dataclass(frozen=True)
class CircularFamilies:
    """Circular-section plane families.

    ``kind`` is "generic" (two families), "revolution" (one family, planes
    normal to the axis) or "sphere" (every plane; no normals listed).
    ``center_lines[i]`` is the diameter holding the circle centres of
    family i.
    """

    kind: str
    normals: tuple
    center_lines: tuple
    center: np.ndarray


def circular_section_planes(q: Quadric, tol: Tolerance = DEFAULT_TOL) -> CircularFamilies:
    cf = reduce(q, tol)
    if cf.cls not in (QC.Ellipsoid, QC.HyperboloidOneSheet, QC.HyperboloidTwoSheets, QC.Cone):
        raise NotCentral(f"{cf.cls} has no centre with circular sections")
    ctr = cf.origin
    if is_sphere(cf):
        return CircularFamilies("sphere", (), (), ctr)
    mu = np.array([cf.quadric.a, cf.quadric.a1, cf.quadric.a2])
    imax, imid, imin = (int(i) for i in np.argsort(-mu))
    spread = mu[imax] - mu[imin]
    R = cf.to_original.R
    ev = np.eye(3)
    if mu[imax] - mu[imid] <= CIRCLE_RTOL * spread:
        raw = [ev[imin]]
        kind = "revolution"
    elif mu[imid] - mu[imin] <= CIRCLE_RTOL * spread:
        raw = [ev[imax]]
        kind = "revolution"
    else:
        p = math.sqrt(mu[imax] - mu[imid])
        r = math.sqrt(mu[imid] - mu[imin])
        raw = [unit(p * ev[imax] + r * ev[imin]), unit(p * ev[imax] - r * ev[imin])]
        kind = "generic"
    normals = tuple(R @ n for n in raw)
    lines = tuple(Line3.through(ctr, R @ (n / mu)) for n in raw)
    return CircularFamilies(kind, normals, lines, ctr)
