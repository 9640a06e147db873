"""Cones through an ellipse, and verifiers for the conoid and spheroid section theorems.

Surfaces are kept in canonical pose with the revolution axis on z:

* Ortoconoide     x^2 + y^2 = N z
* Ambliconoide    z^2/b^2 - (x^2 + y^2)/a^2 = 1   (two sheets, envelope cone at O)
                  (x^2 + y^2)/a^2 - z^2/b^2 = 1   (``sheets=1``)
* spheroids       (x^2 + y^2)/e^2 + z^2/c^2 = 1   (c axial, e equatorial)

Ratios written T(x) and O(a, b) below are x^2 and a*b.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .canonical import QC, CanonicalForm, is_sphere, revolution_axis
from .core import (DEFAULT_TOL, Cone3, Ellipse3, Line3, Plane3, Quadric, Tolerance,
                   evaluate, unit)
from .errors import (ClauseMismatch, DegenerateApex, DegenerateInput, GeneratorMiss,
                     NonPositiveParameter, NotOblique, NoValidChord, OpenSection,
                     RevolutionSpecial)
from .sections import CC, PlanarConic, circular_section_planes, conic_similar, plane_section

ELLIPSE_SAMPLES = 64
RATIO_SAMPLES = 16
CS_OFFSETS = (0.2, 0.5, 0.8)
Z = np.array([0.0, 0.0, 1.0])


class CircularInput(UserWarning):
    """Cone requested over a circle: the construction is trivial."""


# -- cones over an ellipse ---------------------------------------------------

def cone_over_ellipse(vertex, center, e1, e2, s1: float, s2: float) -> Quadric:
    """Quadric cone with the given vertex through the ellipse
    center + s1 cos(t) e1 + s2 sin(t) e2 (e1, e2 orthonormal).

    A point P is on the cone when the projection of P from the vertex onto
    the base plane lies on the ellipse.  Clearing the projective
    denominator gives (P-O)^T Q (P-O) = 0 with
    Q = A^T E A - m m^T, A = (O-M) m^T + k0 I, k0 = m.(M-O).
    """
    O = np.asarray(vertex, dtype=float)
    M = np.asarray(center, dtype=float)
    e1, e2 = unit(e1), unit(e2)
    m = np.cross(e1, e2)
    delta = O - M
    k0 = -float(m @ delta)
    if abs(k0) <= 1e-12 * (1.0 + np.linalg.norm(delta)):
        raise DegenerateApex("vertex lies in the base plane")
    A = np.outer(delta, m) + k0 * np.eye(3)
    E = np.outer(e1, e1) / s1**2 + np.outer(e2, e2) / s2**2
    Q3 = A.T @ E @ A - np.outer(m, m)
    return Quadric.from_parts(Q3, -Q3 @ O, float(O @ Q3 @ O)).normalized()


def ellipse_residual(q: Quadric, e: Ellipse3, n: int = ELLIPSE_SAMPLES) -> float:
    """Max |evaluate| over n ellipse samples, relative to the coefficient scale."""
    return max(abs(evaluate(q, p)) for p in e.sample(n)) / q.scale()


@dataclass(frozen=True)
class ConeConstruction:
    cone: Cone3
    base_center: np.ndarray          # auxiliary base: circle or ellipse on the chord
    base_axes: tuple                 # unit directions
    base_semi: tuple
    chord: tuple                     # chord endpoints (B, D) or (A, D)
    branch: str                      # "perpendicular", "circle", "ellipse", "isosceles"
    residual: float                  # containment residual of the defining ellipse
    circular_input: bool = False
    extras: dict = field(default_factory=dict)


def _finish(O, e, M, axes, semi, chord, branch, circular, extras=None):
    q = cone_over_ellipse(O, M, axes[0], axes[1], semi[0], semi[1])
    cone = Cone3(O, q)
    return ConeConstruction(cone, np.asarray(M), tuple(axes), tuple(semi), chord,
                            branch, ellipse_residual(q, e), circular, extras or {})


def _warn_circular(e: Ellipse3) -> bool:
    if e.a_major - e.a_minor <= 1e-12 * e.a_major:
        warnings.warn("ellipse is a circle; the cone construction is trivial",
                      CircularInput, stacklevel=3)
        return True
    return False


def cone_through_ellipse_perpendicular(e: Ellipse3, h: float) -> ConeConstruction:
    """Vertex above the centre at height h; base circle on the chord BD.

    In the plane of CO and the minor axis BB', the chord from B meets CO
    at E and OB' at D with BE.ED : EO^2 = CA^2 : CO^2.  Taking C at the
    origin, B = (b, 0), O = (0, h) and E = (0, e) this reads
    (b^2 + e^2) / (h^2 - e^2) = a^2 / h^2, so e = h sqrt((a^2-b^2)/(a^2+h^2)).
    The circle on BD lies in the plane through BD parallel to AA'.
    """
    if not h > 0:
        raise NonPositiveParameter("height must be positive")
    circular = _warn_circular(e)
    a, b = e.a_major, e.a_minor
    n = e.normal
    O = e.center + h * n
    if circular:
        cone = Cone3.right(O, -n, math.atan2(a, h))
        return ConeConstruction(cone, e.center, (e.e_major, e.e_minor), (a, b),
                                (e.center + b * e.e_minor, e.center - b * e.e_minor),
                                "perpendicular", ellipse_residual(cone.quadric, e), True)
    disc = (a * a - b * b) / (a * a + h * h)
    if not disc >= 0:
        raise NoValidChord("proportion has no real chord")
    ez = h * math.sqrt(disc)
    t_d = 2 * h / (ez + h)
    B2 = np.array([b, 0.0])
    E2 = np.array([0.0, ez])
    D2 = B2 + t_d * (E2 - B2)

    def lift(p2):
        return e.center + p2[0] * e.e_minor + p2[1] * n

    B, D = lift(B2), lift(D2)
    M = 0.5 * (B + D)
    r = 0.5 * float(np.linalg.norm(D - B))
    ratio = ((b * b + ez * ez) / (h * h - ez * ez), a * a / (h * h))
    return _finish(O, e, M, (unit(D - B), e.e_major), (r, r), (B, D), "perpendicular",
                   False, {"E": lift(E2), "proportion": ratio})


def cone_through_ellipse_oblique(e: Ellipse3, O, rtol: float = 1e-9) -> ConeConstruction:
    """Vertex in the plane through AA' normal to the ellipse.

    D is on the ray OA' with OD = OA; FG passes through C parallel to AD,
    F on OA and G on OA'.  If CB^2 = FC.CG the base is the circle on AD,
    otherwise the ellipse on AD whose other diameter d has
    d^2 : AD^2 = CB^2 : FC.CG.  Both lie in the plane through AD parallel
    to BB'.  With OA = OA' the point D is A' and the ellipse itself is the
    base, which is the perpendicular case.
    """
    O = np.asarray(O, dtype=float)
    circular = _warn_circular(e)
    a, b = e.a_major, e.a_minor
    n = e.normal
    w = O - e.center
    h = float(w @ n)
    if abs(h) <= 1e-12 * (1.0 + np.linalg.norm(w)):
        raise DegenerateApex("apex lies in the plane of the ellipse")
    if abs(w @ e.e_minor) > 1e-9 * (1.0 + np.linalg.norm(w)):
        raise DegenerateInput("apex is not in the plane through the major axis "
                              "normal to the ellipse")
    if h < 0:
        n = -n
        h = -h
    x0 = float(w @ e.e_major)
    O2 = np.array([x0, h])
    A2, A2p = np.array([a, 0.0]), np.array([-a, 0.0])

    def lift(p2):
        return e.center + p2[0] * e.e_major + p2[1] * n

    OA, OAp = np.linalg.norm(A2 - O2), np.linalg.norm(A2p - O2)
    if abs(OA - OAp) <= rtol * max(OA, OAp):
        res = _finish(O, e, e.center, (e.e_major, e.e_minor), (a, b),
                      (lift(A2), lift(A2p)), "isosceles", circular)
        return res
    D2 = O2 + OA * (A2p - O2) / OAp
    u = D2 - A2
    F2 = _meet(np.zeros(2), u, O2, A2 - O2)
    G2 = _meet(np.zeros(2), u, O2, A2p - O2)
    FC, CG = float(np.linalg.norm(F2)), float(np.linalg.norm(G2))
    AD = float(np.linalg.norm(u))
    A, D = lift(A2), lift(D2)
    M = 0.5 * (A + D)
    extras = {"F": lift(F2), "G": lift(G2), "FC_CG": FC * CG, "CB2": b * b}
    if abs(b * b - FC * CG) <= rtol * b * b:
        return _finish(O, e, M, (unit(D - A), e.e_minor), (AD / 2, AD / 2), (A, D),
                       "circle", circular, extras)
    d = AD * b / math.sqrt(FC * CG)
    return _finish(O, e, M, (unit(D - A), e.e_minor), (AD / 2, d / 2), (A, D),
                   "ellipse", circular, extras)


def _meet(p, u, q, v):
    """Intersection of the 2D lines p + s u and q + t v."""
    s, _ = np.linalg.solve(np.column_stack([u, -v]), q - p)
    return p + s * u


# -- conoids and spheroids ---------------------------------------------------

class ConoidKind(enum.Enum):
    Ortoconoide = "Ortoconoide"
    Ambliconoide = "Ambliconoide"
    SpheroidProlate = "SpheroidProlate"
    SpheroidOblate = "SpheroidOblate"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ConoidSpec:
    """``params`` is (N,) for the ortoconoide, (a, b) for the ambliconoide
    (equatorial a, axial b) and (axial, equatorial) for spheroids."""

    kind: ConoidKind
    params: tuple
    sheets: int = 2

    def __post_init__(self):
        if isinstance(self.kind, str):
            object.__setattr__(self, "kind", ConoidKind(self.kind))
        p = tuple(float(x) for x in self.params)
        object.__setattr__(self, "params", p)
        need = 1 if self.kind is ConoidKind.Ortoconoide else 2
        if len(p) != need:
            raise ValueError(f"{self.kind} takes {need} parameter(s)")
        if not all(x > 0 and math.isfinite(x) for x in p):
            raise NonPositiveParameter("conoid parameters must be positive")
        if self.kind is ConoidKind.SpheroidProlate and not p[0] > p[1]:
            raise ValueError("prolate spheroid needs axial > equatorial")
        if self.kind is ConoidKind.SpheroidOblate and not p[0] < p[1]:
            raise ValueError("oblate spheroid needs axial < equatorial")
        if self.sheets not in (1, 2):
            raise ValueError("sheets must be 1 or 2")

    @classmethod
    def ortoconoide(cls, N: float) -> ConoidSpec:
        return cls(ConoidKind.Ortoconoide, (N,))

    @classmethod
    def ambliconoide(cls, a: float, b: float, sheets: int = 2) -> ConoidSpec:
        return cls(ConoidKind.Ambliconoide, (a, b), sheets)

    @classmethod
    def spheroid(cls, axial: float, equatorial: float) -> ConoidSpec:
        kind = ConoidKind.SpheroidProlate if axial > equatorial else ConoidKind.SpheroidOblate
        return cls(kind, (axial, equatorial))

    def quadric(self) -> Quadric:
        if self.kind is ConoidKind.Ortoconoide:
            (N,) = self.params
            return Quadric(a=1.0, a1=1.0, c2=-N / 2)
        if self.kind is ConoidKind.Ambliconoide:
            a, b = self.params
            s = 1.0 if self.sheets == 1 else -1.0
            return Quadric(a=s / a**2, a1=s / a**2, a2=-s / b**2, k=1.0)
        c, e = self.params
        return Quadric(a=1 / e**2, a1=1 / e**2, a2=1 / c**2, k=1.0)

    def envelope_cone(self) -> Quadric:
        if self.kind is not ConoidKind.Ambliconoide:
            raise ValueError("only the ambliconoide has an envelope cone")
        a, b = self.params
        return Quadric(a=1 / a**2, a1=1 / a**2, a2=-1 / b**2)

    def meridian(self) -> PlanarConic:
        """Generating curve: the section by the axial plane y = 0."""
        return plane_section(self.quadric(), Plane3(np.array([0.0, 1.0, 0.0]), 0.0))


@dataclass(frozen=True)
class SectionVerdict:
    predicted: CC
    observed: PlanarConic
    axis_ok: bool
    axis_residual: float
    similar: bool | None = None
    residuals: dict = field(default_factory=dict)
    flags: tuple = ()

    @property
    def class_ok(self) -> bool:
        return self.observed.cls is self.predicted

    @property
    def ok(self) -> bool:
        return self.class_ok and self.axis_ok and all(
            v for k, v in self.residuals.items() if k.endswith("_ok"))


def _axial_trace(pl: Plane3) -> Line3 | None:
    """pl meets the axial plane perpendicular to it in this line (None if pl is
    perpendicular to the axis, when every axial plane qualifies)."""
    m = np.cross(Z, pl.n)
    if np.linalg.norm(m) < 1e-12:
        return None
    m = unit(m)
    d = unit(np.cross(pl.n, m))
    # point on both planes: pl.n . p = pl.d and m . p = 0, closest to origin
    N = np.array([pl.n, m])
    p = np.linalg.lstsq(N, np.array([pl.d, 0.0]), rcond=None)[0]
    return Line3(p, d)


def _axis_location(sec: PlanarConic, pl: Plane3) -> float:
    """Distance of the section's axis from the trace line (0 when it lies on it)."""
    L = _axial_trace(pl)
    c = sec.center3
    if L is None:
        return float(np.linalg.norm(c[:2]))
    off = L.distance_to(c)
    if sec.cls is CC.Circle:
        return off
    g = sec.geometry
    cands = (g.axes[0],) if sec.cls is CC.Parabola else g.axes
    ang = min(float(np.linalg.norm(np.cross(sec.lift_dir(ax), L.u))) for ax in cands)
    return max(off, ang)


def _line_hits(q: Quadric, L: Line3) -> np.ndarray:
    """Parameters where the line meets the quadric (real roots only)."""
    Q = q.quadratic_matrix()
    a2 = float(L.u @ Q @ L.u)
    a1 = 2.0 * float(L.u @ (Q @ L.p0 + q.linear()))
    a0 = evaluate(q, L.p0)
    if abs(a2) < 1e-14 * q.scale():
        return np.array([-a0 / a1]) if a1 != 0 else np.array([])
    disc = a1 * a1 - 4 * a2 * a0
    if disc < 0:
        return np.array([])
    r = math.sqrt(disc)
    return np.sort(np.array([(-a1 - r) / (2 * a2), (-a1 + r) / (2 * a2)]))


def _classify_plane(pl: Plane3, eps: float = 1e-12):
    nz = abs(float(pl.n @ Z))
    if nz < eps:
        return "axial" if abs(pl.d) < eps else "parallel"
    if nz > 1 - eps:
        return "perpendicular"
    return "oblique"


def verify_cs11(spec: ConoidSpec, pl: Plane3, clause: str,
                tol: Tolerance = DEFAULT_TOL) -> SectionVerdict:
    """Axial, axis-parallel and envelope-vertex sections.

    clause "axial": section equals the meridian.  "parallel": section is
    similar to the meridian, with the same orthia for the ortoconoide.
    "vertex" (ambliconoide only): a plane through the envelope-cone vertex
    that does not contain the axis gives a hyperbola not similar to the
    meridian.
    """
    where = _classify_plane(pl)
    if clause == "axial" and where != "axial":
        raise ClauseMismatch("plane does not contain the axis")
    if clause == "parallel" and where != "parallel":
        raise ClauseMismatch("plane is not parallel to the axis")
    if clause == "vertex":
        if spec.kind is not ConoidKind.Ambliconoide:
            raise ClauseMismatch("vertex clause needs an ambliconoide")
        if abs(pl.d) > 1e-12 or where == "axial":
            raise ClauseMismatch("plane must pass through the envelope-cone vertex "
                                 "without containing the axis")
    if clause not in ("axial", "parallel", "vertex"):
        raise ValueError(f"unknown clause {clause!r}")
    q = spec.quadric()
    sec = plane_section(q, pl, tol)
    mer = spec.meridian()
    predicted = {ConoidKind.Ortoconoide: CC.Parabola,
                 ConoidKind.Ambliconoide: CC.Hyperbola}.get(spec.kind, CC.Ellipse)
    if sec.cls not in (CC.Ellipse, CC.Circle, CC.Parabola, CC.Hyperbola):
        raise ClauseMismatch(f"plane cuts a {sec.cls}, not a proper conic")
    res = {}
    ax = _axis_location(sec, pl)
    similar = conic_similar(sec, mer, 1e-9) if sec.cls is predicted else False
    if spec.kind is ConoidKind.Ortoconoide and sec.cls is CC.Parabola:
        dl = abs(sec.geometry.latus - spec.params[0])
        res["latus"] = sec.geometry.latus
        res["latus_residual"] = dl
        res["latus_ok"] = dl < 1e-9 * spec.params[0]
    if sec.cls is not CC.Parabola:
        res["invariant"] = sec.invariant().ratio
        res["meridian_invariant"] = mer.invariant().ratio
    if clause == "vertex":
        res["not_similar_ok"] = not similar
    else:
        res["similar_ok"] = similar
    return SectionVerdict(predicted, sec, ax < 1e-9, ax, similar, res)


def _ordinate_ratios(sec: PlanarConic, n: int = RATIO_SAMPLES):
    """T(K Theta) / O(A Theta, Theta Gamma) at n points K of an ellipse section,
    Theta the foot of K on the major axis A Gamma."""
    g = sec.geometry
    a = g.semi_axes[0]
    out = []
    for t in np.linspace(0.0, 2 * np.pi, n, endpoint=False) + 0.1:
        if abs(math.sin(t)) < 1e-3:
            continue
        K = g.center + a * math.cos(t) * g.axes[0] + g.semi_axes[1] * math.sin(t) * g.axes[1]
        s = float((K - g.center) @ g.axes[0])
        kt2 = float((K - g.center) @ g.axes[1]) ** 2
        out.append(kt2 / ((a + s) * (a - s)))
    return np.array(out)


def _major_checks(q: Quadric, sec: PlanarConic, pl: Plane3, res: dict):
    L = _axial_trace(pl)
    t = _line_hits(q, L)
    if len(t) != 2:
        raise OpenSection("trace line does not cut the surface twice")
    P1, P2 = L.point_at(t[0]), L.point_at(t[1])
    major = float(np.linalg.norm(P2 - P1))
    a, b = sec.geometry.semi_axes
    res["major"] = 2 * a
    res["major_intercept"] = major
    res["major_residual"] = abs(major - 2 * a) / (2 * a)
    res["major_ok"] = res["major_residual"] < 1e-9
    ratios = _ordinate_ratios(sec)
    target = (b / a) ** 2
    res["ratio_target"] = target
    res["ratio_residual"] = float(np.max(np.abs(ratios - target))) / target
    res["ratio_ok"] = res["ratio_residual"] < 1e-9
    return P1, P2


def verify_cs12(spec: ConoidSpec, pl: Plane3, tol: Tolerance = DEFAULT_TOL) -> SectionVerdict:
    """Oblique section of the ortoconoide: an ellipse whose major axis is the
    intercept on the trace of the perpendicular axial plane and whose minor
    axis equals the gap between the axis-parallel lines through the ends of
    the major axis."""
    if spec.kind is not ConoidKind.Ortoconoide:
        raise ClauseMismatch("needs an ortoconoide")
    if _classify_plane(pl) != "oblique":
        raise NotOblique("plane must meet the axis obliquely")
    q = spec.quadric()
    sec = plane_section(q, pl, tol)
    if sec.cls not in (CC.Ellipse, CC.Circle):
        raise OpenSection(f"section is a {sec.cls}")
    res = {}
    P1, P2 = _major_checks(q, sec, pl, res)
    gap = float(np.linalg.norm((P2 - P1)[:2]))
    minor = 2 * sec.geometry.semi_axes[1]
    res["minor"] = minor
    res["minor_gap"] = gap
    res["minor_residual"] = abs(gap - minor) / minor
    res["minor_ok"] = res["minor_residual"] < 1e-9
    ax = _axis_location(sec, pl)
    return SectionVerdict(CC.Ellipse, sec, ax < 1e-9, ax, None, res)


def verify_cs13(spec: ConoidSpec, pl: Plane3, tol: Tolerance = DEFAULT_TOL) -> SectionVerdict:
    """Section of the ambliconoide by a plane meeting every generator of the
    envelope cone: an ellipse whose major axis is the intercept inside the
    surface along the trace of the perpendicular axial plane."""
    if spec.kind is not ConoidKind.Ambliconoide:
        raise ClauseMismatch("needs an ambliconoide")
    q = spec.quadric()
    where = _classify_plane(pl)
    cone_sec = plane_section(spec.envelope_cone(), pl, tol)
    if cone_sec.cls not in (CC.Ellipse, CC.Circle):
        raise GeneratorMiss(f"plane misses some generators (cone section {cone_sec.cls})")
    sec = plane_section(q, pl, tol)
    if sec.cls not in (CC.Ellipse, CC.Circle):
        raise ClauseMismatch(f"plane cuts a {sec.cls} from the surface")
    flags = ()
    res = {}
    if where == "perpendicular":
        flags = ("PerpendicularAxis",)
        ax = _axis_location(sec, pl)
        return SectionVerdict(CC.Circle, sec, ax < 1e-9, ax, None, res, flags)
    _major_checks(q, sec, pl, res)
    ax = _axis_location(sec, pl)
    return SectionVerdict(CC.Ellipse, sec, ax < 1e-9, ax, None, res, flags)


# -- parabolic segments ------------------------------------------------------

def orthotome_segment(N: float, diameter: float, angle: float = math.pi / 2):
    """(base, diameter, angle) of the segment of y^2 = N x cut off by a chord
    meeting its diameter at ``angle`` at distance ``diameter`` from the curve.

    Along a diameter the orthia becomes N / sin^2(angle), so the half-base
    is sqrt(N diameter) / sin(angle).
    """
    if not (N > 0 and diameter > 0 and 0 < angle < math.pi):
        raise NonPositiveParameter("need N, diameter > 0 and angle in (0, pi)")
    return (2 * math.sqrt(N * diameter) / math.sin(angle), diameter, angle)


def parabola_segments_similar(seg1, seg2, rtol: float = 1e-9) -> bool:
    """Equal base:diameter ratios and equal angles."""
    for base, dia, ang in (seg1, seg2):
        if not (base > 0 and dia > 0 and 0 < ang < math.pi):
            raise NonPositiveParameter("segments need positive lengths and angle in (0, pi)")
    r1, r2 = seg1[0] / seg1[1], seg2[0] / seg2[1]
    return abs(r1 - r2) <= rtol * max(r1, r2) and abs(seg1[2] - seg2[2]) <= rtol


# -- circular sections of the cone on an ellipsoid ---------------------------

@dataclass(frozen=True)
class ConeCircleReport:
    vertex: np.ndarray
    cone: Quadric
    normal: np.ndarray
    offsets: tuple
    ratios: tuple               # min|lambda| / max|lambda| on each family plane
    control_ratio: float        # same on a plane outside the family
    verdict: bool


def _eig_ratio(sec: PlanarConic) -> float:
    lam = np.abs(np.linalg.eigvalsh(sec.quadratic_part()))
    return float(lam.min() / lam.max())


def cone_circular_sections_on_ellipsoid(cf: CanonicalForm, base_plane: Plane3 | None = None,
                                        offsets=CS_OFFSETS,
                                        tol: Tolerance = DEFAULT_TOL) -> ConeCircleReport:
    """Cone from the end V of the diameter carrying the circle centres,
    through a section of the ellipsoid (the central circular one unless
    ``base_plane`` is given).  Planes of the circular family at fractions
    of the admissible range must cut circles from the cone too."""
    if cf.cls is not QC.Ellipsoid:
        raise ValueError(f"{cf.cls} is not an ellipsoid")
    if is_sphere(cf) or revolution_axis(cf) is not None:
        raise RevolutionSpecial("ellipsoid of revolution: one circular family only")
    q = cf.source
    fam = circular_section_planes(q, tol)
    n = fam.normals[0]
    ctr = fam.center
    Q = q.quadratic_matrix()
    u = np.linalg.solve(Q, n)
    g = -(evaluate(q, ctr))                 # value of x^T Q x on the surface, about the centre
    hq = math.sqrt(g / float(u @ Q @ u))
    V = ctr + hq * u
    h = float(n @ (V - ctr))
    if base_plane is None:
        base_plane = Plane3(n, float(n @ ctr))
    base = plane_section(q, base_plane, tol)
    if base.cls not in (CC.Ellipse, CC.Circle):
        raise DegenerateInput(f"base plane cuts a {base.cls}")
    E = base.to_ellipse3()
    cone = cone_over_ellipse(V, E.center, E.e_major, E.e_minor, E.a_major, E.a_minor)
    ratios = tuple(_eig_ratio(plane_section(cone, Plane3(n, float(n @ ctr) + f * h), tol))
                   for f in offsets)
    m = unit(n + 0.3 * fam.normals[1])
    mid = ctr + 0.5 * (V - ctr)
    control = _eig_ratio(plane_section(cone, Plane3(m, float(m @ mid)), tol))
    ok = all(abs(r - 1.0) < 1e-8 for r in ratios)
    return ConeCircleReport(V, cone, n, tuple(offsets), ratios, control, ok)
