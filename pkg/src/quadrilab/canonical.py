"""Reduction of a quadric to principal axes and its real affine class.

The reduction rotates onto the eigenframe of the quadratic part and
translates to complete squares.  Parabolic and cylindrical cases then get
whatever linear term survives aligned with a coordinate axis.  Canonical poses:

* semi-axes are sorted descending, a >= b >= c;
* hyperboloid of one sheet   x2/a2 + y2/b2 - z2/c2 = 1  (negative axis last);
* hyperboloid of two sheets -x2/a2 - y2/b2 + z2/c2 = 1  (sheets along z);
* paraboloids P x2 +/- P' y2 = z, opening toward +z.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .core import DEFAULT_TOL, Line3, Quadric, RigidMotion, Tolerance, transform
from .errors import DegenerateInput
from .spectral import eigen_symmetric3


class QuadricClass(enum.Enum):
    Ellipsoid = "Ellipsoid"
    ImaginaryEllipsoid = "ImaginaryEllipsoid"
    HyperboloidOneSheet = "HyperboloidOneSheet"
    HyperboloidTwoSheets = "HyperboloidTwoSheets"
    EllipticParaboloid = "EllipticParaboloid"
    HyperbolicParaboloid = "HyperbolicParaboloid"
    Cone = "Cone"
    ImaginaryCone = "ImaginaryCone"
    EllipticCylinder = "EllipticCylinder"
    ImaginaryEllipticCylinder = "ImaginaryEllipticCylinder"
    HyperbolicCylinder = "HyperbolicCylinder"
    ParabolicCylinder = "ParabolicCylinder"
    IntersectingPlanes = "IntersectingPlanes"
    ImaginaryIntersectingPlanes = "ImaginaryIntersectingPlanes"
    ParallelPlanes = "ParallelPlanes"
    ImaginaryParallelPlanes = "ImaginaryParallelPlanes"
    CoincidentPlanes = "CoincidentPlanes"

    def __str__(self):
        return self.value


QC = QuadricClass

CENTRAL_CLASSES = frozenset({QC.Ellipsoid, QC.ImaginaryEllipsoid,
                             QC.HyperboloidOneSheet, QC.HyperboloidTwoSheets})
IMAGINARY_CLASSES = frozenset({QC.ImaginaryEllipsoid, QC.ImaginaryCone,
                               QC.ImaginaryEllipticCylinder,
                               QC.ImaginaryIntersectingPlanes,
                               QC.ImaginaryParallelPlanes})

# Negating only the constant of a centred equation (x^T Q x = k -> x^T Q x = -k).
CONSTANT_FLIP = {
    QC.Ellipsoid: QC.ImaginaryEllipsoid,
    QC.ImaginaryEllipsoid: QC.Ellipsoid,
    QC.HyperboloidOneSheet: QC.HyperboloidTwoSheets,
    QC.HyperboloidTwoSheets: QC.HyperboloidOneSheet,
    QC.Cone: QC.Cone,
    QC.ImaginaryCone: QC.ImaginaryCone,
    QC.EllipticCylinder: QC.ImaginaryEllipticCylinder,
    QC.ImaginaryEllipticCylinder: QC.EllipticCylinder,
    QC.HyperbolicCylinder: QC.HyperbolicCylinder,
    QC.IntersectingPlanes: QC.IntersectingPlanes,
    QC.ImaginaryIntersectingPlanes: QC.ImaginaryIntersectingPlanes,
    QC.ParallelPlanes: QC.ImaginaryParallelPlanes,
    QC.ImaginaryParallelPlanes: QC.ParallelPlanes,
    QC.CoincidentPlanes: QC.CoincidentPlanes,
}


@dataclass(frozen=True)
class CanonicalForm:
    """Result of :func:`reduce`.

    ``motion`` maps original coordinates to canonical ones, so
    ``transform(quadric, motion)`` is proportional to ``source``.
    ``axes`` holds semi-axes (central and cylinder classes) and ``params``
    holds (P, P') for paraboloids or (P,) for the parabolic cylinder.
    """

    cls: QuadricClass
    axes: tuple = ()
    params: tuple = ()
    motion: RigidMotion = field(default_factory=RigidMotion)
    quadric: Quadric | None = None
    source: Quadric | None = None

    @property
    def to_original(self) -> RigidMotion:
        return self.motion.inverse()

    @property
    def origin(self) -> np.ndarray:
        """Canonical origin (center or vertex) in original coordinates."""
        return self.to_original.tau.copy()

    def axis_direction(self, i: int) -> np.ndarray:
        """Canonical axis i expressed in original coordinates."""
        return self.to_original.R[:, i].copy()

    def to_canonical(self, p) -> np.ndarray:
        return self.motion(p)

    def from_canonical(self, p) -> np.ndarray:
        return self.to_original(p)


def _canonical_quadric(cls: QuadricClass, axes, params) -> Quadric:
    if cls in (QC.Ellipsoid, QC.ImaginaryEllipsoid):
        a, b, c = axes
        k = 1.0 if cls is QC.Ellipsoid else -1.0
        return Quadric(a=1 / a**2, a1=1 / b**2, a2=1 / c**2, k=k)
    if cls is QC.HyperboloidOneSheet:
        a, b, c = axes
        return Quadric(a=1 / a**2, a1=1 / b**2, a2=-1 / c**2, k=1.0)
    if cls is QC.HyperboloidTwoSheets:
        a, b, c = axes
        return Quadric(a=-1 / a**2, a1=-1 / b**2, a2=1 / c**2, k=1.0)
    if cls is QC.Cone:
        a, b, c = axes
        return Quadric(a=1 / a**2, a1=1 / b**2, a2=-1 / c**2)
    if cls is QC.ImaginaryCone:
        a, b, c = axes
        return Quadric(a=1 / a**2, a1=1 / b**2, a2=1 / c**2)
    if cls is QC.EllipticParaboloid:
        P, P1 = params
        return Quadric(a=P, a1=P1, c2=-0.5)
    if cls is QC.HyperbolicParaboloid:
        P, P1 = params
        return Quadric(a=P, a1=-P1, c2=-0.5)
    if cls is QC.ParabolicCylinder:
        (P,) = params
        return Quadric(a=P, c2=-0.5)
    if cls in (QC.EllipticCylinder, QC.ImaginaryEllipticCylinder):
        a, b = axes
        k = 1.0 if cls is QC.EllipticCylinder else -1.0
        return Quadric(a=1 / a**2, a1=1 / b**2, k=k)
    if cls is QC.HyperbolicCylinder:
        a, b = axes
        return Quadric(a=1 / a**2, a1=-1 / b**2, k=1.0)
    if cls is QC.IntersectingPlanes:
        a, b = axes
        return Quadric(a=1 / a**2, a1=-1 / b**2)
    if cls is QC.ImaginaryIntersectingPlanes:
        a, b = axes
        return Quadric(a=1 / a**2, a1=1 / b**2)
    if cls is QC.ParallelPlanes:
        (a,) = axes
        return Quadric(a=1.0, k=a * a)
    if cls is QC.ImaginaryParallelPlanes:
        (a,) = axes
        return Quadric(a=1.0, k=-a * a)
    if cls is QC.CoincidentPlanes:
        return Quadric(a=1.0)
    raise AssertionError(cls)


def _semi(mu):
    return 1.0 / math.sqrt(abs(mu))


def reduce(q: Quadric, tol: Tolerance = DEFAULT_TOL) -> CanonicalForm:
    """Rotate and translate q to its canonical form."""
    H = q.homogeneous()
    s = float(np.linalg.norm(H, 2))
    Q = q.quadratic_matrix() / s
    ell = q.linear() / s
    g = -q.k / s
    sp = eigen_symmetric3(Q, tol)
    lam, E = sp.eigenvalues, sp.frame
    if sp.rank3 == 0:
        raise DegenerateInput("quadratic part vanishes: first-degree equation, not a quadric")
    thr = tol.rank_eps
    big = np.max(np.abs(lam))
    nz = [i for i in range(3) if abs(lam[i]) > tol.rank_eps * big]
    zr = [i for i in range(3) if i not in nz]
    lp = E.T @ ell
    y0 = np.zeros(3)
    g0 = g
    for i in nz:
        y0[i] = -lp[i] / lam[i]
        g0 -= lp[i] ** 2 / lam[i]
    ev = np.eye(3)
    # B: columns are the canonical axes written in eigen coordinates
    if len(nz) == 3:
        if abs(g0) <= thr:
            npos = sum(1 for i in nz if lam[i] > 0)
            if npos in (0, 3):
                mu = np.abs(lam)
                order = sorted(nz, key=lambda i: mu[i])
                axes = tuple(math.sqrt(mu[order[2]] / mu[i]) for i in order)
                cls = QC.ImaginaryCone
            else:
                sgn = 1.0 if npos == 2 else -1.0
                mu = sgn * lam
                pos = sorted([i for i in nz if mu[i] > 0], key=lambda i: mu[i])
                neg = [i for i in nz if mu[i] < 0]
                order = pos + neg
                c0 = abs(mu[neg[0]])
                axes = tuple(math.sqrt(c0 / abs(mu[i])) for i in order)
                cls = QC.Cone
        else:
            mu = -lam / g0
            pos = sorted([i for i in nz if mu[i] > 0], key=lambda i: mu[i])
            neg = sorted([i for i in nz if mu[i] < 0], key=lambda i: -mu[i])
            if len(neg) == 0:
                cls, order = QC.Ellipsoid, pos
            elif len(pos) == 0:
                cls, order = QC.ImaginaryEllipsoid, neg
            elif len(pos) == 2:
                cls, order = QC.HyperboloidOneSheet, pos + neg
            else:
                cls, order = QC.HyperboloidTwoSheets, neg + pos
            axes = tuple(_semi(mu[i]) for i in order)
        B = np.column_stack([ev[i] for i in order])
        params = ()
    elif len(nz) == 2:
        j = zr[0]
        lz = lp[j]
        if abs(lz) > thr:
            # lam1 z1^2 + lam2 z2^2 + 2 lz (y_j - y0_j) = 0
            y0[j] = -g0 / (2 * lz)
            p = {i: lam[i] / (2 * abs(lz)) for i in nz}
            w3 = -math.copysign(1.0, lz) * ev[j]
            if (p[nz[0]] > 0) == (p[nz[1]] > 0):
                if p[nz[0]] < 0:
                    w3 = -w3
                    p = {i: -v for i, v in p.items()}
                order = sorted(nz, key=lambda i: p[i])
                cls = QC.EllipticParaboloid
                params = (p[order[0]], p[order[1]])
            else:
                ipos = max(nz, key=lambda i: p[i])
                ineg = min(nz, key=lambda i: p[i])
                if p[ipos] < -p[ineg]:
                    w3 = -w3
                    p = {i: -v for i, v in p.items()}
                    ipos, ineg = ineg, ipos
                order = [ipos, ineg]
                cls = QC.HyperbolicParaboloid
                params = (p[ipos], -p[ineg])
            B = np.column_stack([ev[order[0]], ev[order[1]], w3])
            axes = ()
        else:
            params = ()
            if abs(g0) <= thr:
                same = (lam[nz[0]] > 0) == (lam[nz[1]] > 0)
                if same:
                    mu = np.abs(lam)
                    order = sorted(nz, key=lambda i: mu[i])
                    axes = tuple(math.sqrt(mu[order[1]] / mu[i]) for i in order)
                    cls = QC.ImaginaryIntersectingPlanes
                else:
                    ipos = max(nz, key=lambda i: lam[i])
                    ineg = min(nz, key=lambda i: lam[i])
                    order = [ipos, ineg]
                    axes = (math.sqrt(abs(lam[ineg]) / lam[ipos]), 1.0)
                    cls = QC.IntersectingPlanes
            else:
                mu = -lam / g0
                if mu[nz[0]] > 0 and mu[nz[1]] > 0:
                    cls = QC.EllipticCylinder
                    order = sorted(nz, key=lambda i: mu[i])
                elif mu[nz[0]] < 0 and mu[nz[1]] < 0:
                    cls = QC.ImaginaryEllipticCylinder
                    order = sorted(nz, key=lambda i: -mu[i])
                else:
                    cls = QC.HyperbolicCylinder
                    order = sorted(nz, key=lambda i: -mu[i])
                axes = tuple(_semi(mu[i]) for i in order)
            B = np.column_stack([ev[order[0]], ev[order[1]], ev[j]])
    else:
        i = nz[0]
        j1, j2 = zr
        lin = np.array([lp[j1], lp[j2]])
        nl = float(np.linalg.norm(lin))
        if nl > thr:
            u = (lin[0] * ev[j1] + lin[1] * ev[j2]) / nl
            v = (-lin[1] * ev[j1] + lin[0] * ev[j2]) / nl
            # lam z^2 + 2 nl (s_u) + g0 = 0 with s_u the coordinate along u
            y0 = y0 + (-g0 / (2 * nl)) * u
            w3 = -math.copysign(1.0, lam[i]) * u
            B = np.column_stack([ev[i], v, w3])
            cls = QC.ParabolicCylinder
            params = (abs(lam[i]) / (2 * nl),)
            axes = ()
        else:
            params = ()
            B = np.column_stack([ev[i], ev[j1], ev[j2]])
            if abs(g0) <= thr:
                cls, axes = QC.CoincidentPlanes, ()
            elif -g0 / lam[i] > 0:
                cls, axes = QC.ParallelPlanes, (math.sqrt(-g0 / lam[i]),)
            else:
                cls, axes = QC.ImaginaryParallelPlanes, (math.sqrt(g0 / lam[i]),)
    if np.linalg.det(B) < 0:
        B[:, 0] = -B[:, 0]
    R = E @ B
    # re-orthonormalise against rounding in E (det stays +1)
    U, _, Vt = np.linalg.svd(R)
    R = U @ Vt
    c2o = RigidMotion(R, E @ y0)
    canon = _canonical_quadric(cls, axes, params)
    return CanonicalForm(cls, tuple(float(x) for x in axes),
                         tuple(float(x) for x in params),
                         c2o.inverse(), canon, q)


def classify(q: Quadric, tol: Tolerance = DEFAULT_TOL) -> QuadricClass:
    return reduce(q, tol).cls


def rebuild(cf: CanonicalForm) -> Quadric:
    """The canonical quadric pulled back to original coordinates."""
    return transform(cf.quadric, cf.motion)


def proportionality_error(q1: Quadric, q2: Quadric) -> float:
    """Max coefficient deviation after normalising both (sign-aligned) by max |coef|."""
    v1 = q1.vector() / q1.scale()
    v2 = q2.vector() / q2.scale()
    i = int(np.argmax(np.abs(v1)))
    if v2[i] * v1[i] < 0:
        v2 = -v2
    return float(np.max(np.abs(v1 - v2)))


def asymptotic_cone(q: Quadric) -> Quadric:
    """Same quadratic part, no linear terms, no constant."""
    return Quadric(q.a, q.a1, q.a2, q.b, q.b1, q.b2)


def revolution_axis(cf: CanonicalForm, rtol: float = 1e-9) -> Line3 | None:
    """Axis of revolution, if the surface has exactly one (spheres return None)."""
    def eq(x, y):
        return abs(x - y) <= rtol * max(abs(x), abs(y))

    if cf.cls is QC.Ellipsoid:
        a, b, c = cf.axes
        if eq(a, c):
            return None
        if eq(a, b):
            return Line3.through(cf.origin, cf.axis_direction(2))
        if eq(b, c):
            return Line3.through(cf.origin, cf.axis_direction(0))
        return None
    pair = {QC.HyperboloidOneSheet: cf.axes[:2], QC.HyperboloidTwoSheets: cf.axes[:2],
            QC.Cone: cf.axes[:2], QC.EllipticCylinder: cf.axes[:2],
            QC.EllipticParaboloid: cf.params}.get(cf.cls)
    if pair is not None and eq(*pair):
        return Line3.through(cf.origin, cf.axis_direction(2))
    return None


def is_sphere(cf: CanonicalForm, rtol: float = 1e-9) -> bool:
    return cf.cls is QC.Ellipsoid and abs(cf.axes[0] - cf.axes[2]) <= rtol * cf.axes[0]


def is_surface_of_revolution(q: Quadric, tol: Tolerance = DEFAULT_TOL,
                             rtol: float = 1e-9) -> bool:
    cf = reduce(q, tol)
    return is_sphere(cf, rtol) or revolution_axis(cf, rtol) is not None


@dataclass(frozen=True)
class DefinitenessReport:
    pairwise: tuple[bool, bool, bool]   # 4ad-b^2>0, 4az-g^2>0, 4dz-e^2>0
    definite: bool
    eigenvalues: np.ndarray


def pairwise_definiteness_conditions(q: Quadric,
                                     tol: Tolerance = DEFAULT_TOL) -> DefinitenessReport:
    """The three 2x2 leading-pair conditions on the general-form coefficients,
    alongside true definiteness from the eigenvalues."""
    alpha, beta, gamma = q.a2, 2 * q.b, 2 * q.b1
    delta, epsilon, zeta = q.a1, 2 * q.b2, q.a
    conds = (4 * alpha * delta - beta**2 > 0,
             4 * alpha * zeta - gamma**2 > 0,
             4 * delta * zeta - epsilon**2 > 0)
    lam = eigen_symmetric3(q.quadratic_matrix(), tol).eigenvalues
    thr = tol.rank_eps * np.max(np.abs(lam))
    definite = bool(np.all(lam > thr) or np.all(lam < -thr))
    return DefinitenessReport(conds, definite, lam)
