"""Quadric coefficients and rigid motions, plus the small geometric primitives.

A :class:`Quadric` stores the ten coefficients of

    a t^2 + a1 u^2 + a2 v^2 + 2 b uv + 2 b1 vt + 2 b2 ut
        + 2 c t + 2 c1 u + 2 c2 v = k

with (t, u, v) read as (x, y, z).  ``evaluate`` returns LHS - k, so the
surface is its zero set.  Everything here is an immutable value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, fields

import numpy as np

from .errors import AllZero, NonFinite

COEFF_NAMES = ("a", "a1", "a2", "b", "b1", "b2", "c", "c1", "c2", "k")


def _frozen(v, shape=None):
    arr = np.array(v, dtype=float)
    if shape is not None and arr.shape != shape:
        raise ValueError(f"expected shape {shape}, got {arr.shape}")
    arr.setflags(write=False)
    return arr


def unit(v):
    v = np.asarray(v, dtype=float)
    n = np.linalg.norm(v)
    if n == 0.0:
        raise ValueError("zero vector has no direction")
    return v / n


@dataclass(frozen=True)
class Tolerance:
    rank_eps: float = 1e-9
    residual_eps: float = 1e-8
    iter_max: int = 64

    def __post_init__(self):
        if not 0.0 < self.rank_eps < 1e-3:
            raise ValueError("rank_eps must lie in (0, 1e-3)")
        if not self.residual_eps > 0.0:
            raise ValueError("residual_eps must be positive")
        if self.iter_max < 10:
            raise ValueError("iter_max must be at least 10")


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True)
class Quadric:
    a: float = 0.0
    a1: float = 0.0
    a2: float = 0.0
    b: float = 0.0
    b1: float = 0.0
    b2: float = 0.0
    c: float = 0.0
    c1: float = 0.0
    c2: float = 0.0
    k: float = 0.0

    def __post_init__(self):
        vals = []
        for f in fields(self):
            v = float(getattr(self, f.name))
            object.__setattr__(self, f.name, v)
            vals.append(v)
        if not all(math.isfinite(v) for v in vals):
            raise NonFinite("quadric coefficients must be finite")
        if all(v == 0.0 for v in vals):
            raise AllZero("all ten coefficients are zero")

    # -- construction ---------------------------------------------------
    @classmethod
    def from_vector(cls, coeffs) -> Quadric:
        return cls(*[float(x) for x in coeffs])

    @classmethod
    def from_parts(cls, Q3, ell, g: float) -> Quadric:
        """Build from x^T Q3 x + 2 ell.x + g = 0 (only the upper triangle of Q3 is read)."""
        Q3 = np.asarray(Q3, dtype=float)
        ell = np.asarray(ell, dtype=float)
        return cls(
            a=Q3[0, 0], a1=Q3[1, 1], a2=Q3[2, 2],
            b=Q3[1, 2], b1=Q3[0, 2], b2=Q3[0, 1],
            c=ell[0], c1=ell[1], c2=ell[2],
            k=-float(g),
        )

    @classmethod
    def from_homogeneous(cls, H) -> Quadric:
        H = np.asarray(H, dtype=float)
        return cls.from_parts(H[:3, :3], H[:3, 3], H[3, 3])

    @classmethod
    def sphere(cls, center=(0.0, 0.0, 0.0), radius: float = 1.0) -> Quadric:
        c = np.asarray(center, dtype=float)
        return cls.from_parts(np.eye(3), -c, c @ c - radius * radius)

    @classmethod
    def axis_ellipsoid(cls, a: float, b: float, c: float) -> Quadric:
        return cls(a=1 / a**2, a1=1 / b**2, a2=1 / c**2, k=1.0)

    # -- views ------------------------------------------------------------
    def vector(self) -> np.ndarray:
        return np.array([getattr(self, n) for n in COEFF_NAMES])

    def quadratic_matrix(self) -> np.ndarray:
        return np.array([
            [self.a, self.b2, self.b1],
            [self.b2, self.a1, self.b],
            [self.b1, self.b, self.a2],
        ])

    def linear(self) -> np.ndarray:
        return np.array([self.c, self.c1, self.c2])

    def homogeneous(self) -> np.ndarray:
        H = np.zeros((4, 4))
        H[:3, :3] = self.quadratic_matrix()
        H[:3, 3] = H[3, :3] = self.linear()
        H[3, 3] = -self.k
        return H

    def scale(self) -> float:
        """Largest absolute coefficient."""
        return float(np.max(np.abs(self.vector())))

    def scaled(self, s: float) -> Quadric:
        return Quadric.from_vector(s * self.vector())

    def normalized(self) -> Quadric:
        """Divide by the largest absolute coefficient (sign kept)."""
        return self.scaled(1.0 / self.scale())


def quadric_from_general(alpha, beta, gamma, delta, epsilon, zeta, eta, theta,
                         iota, kappa) -> Quadric:
    """Convert  alpha z^2 + beta yz + gamma xz + delta y^2 + epsilon xy + zeta x^2
    + eta x + theta y + iota z + kappa = 0  into symmetric storage."""
    vals = [alpha, beta, gamma, delta, epsilon, zeta, eta, theta, iota, kappa]
    if not all(math.isfinite(float(v)) for v in vals):
        raise NonFinite("general-form coefficients must be finite")
    if all(float(v) == 0.0 for v in vals):
        raise AllZero("all ten general-form coefficients are zero")
    return Quadric(
        a=zeta, a1=delta, a2=alpha,
        b=beta / 2, b1=gamma / 2, b2=epsilon / 2,
        c=eta / 2, c1=theta / 2, c2=iota / 2,
        k=-kappa,
    )


def evaluate(q: Quadric, p) -> float:
    p = np.asarray(p, dtype=float)
    return float(p @ q.quadratic_matrix() @ p + 2.0 * q.linear() @ p - q.k)


def gradient(q: Quadric, p) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    return 2.0 * (q.quadratic_matrix() @ p + q.linear())


def relative_residual(q: Quadric, p) -> float:
    """|evaluate| scaled by coefficient size and |p|^2, for on-surface tests."""
    p = np.asarray(p, dtype=float)
    return abs(evaluate(q, p)) / (q.scale() * (1.0 + p @ p))


@dataclass(frozen=True)
class RigidMotion:
    """p -> R p + tau with R a proper rotation."""

    R: np.ndarray = field(default_factory=lambda: np.eye(3))
    tau: np.ndarray = field(default_factory=lambda: np.zeros(3))

    def __post_init__(self):
        R = _frozen(self.R, (3, 3))
        tau = _frozen(self.tau, (3,))
        if np.max(np.abs(R.T @ R - np.eye(3))) >= 1e-10:
            raise ValueError("rotation is not orthonormal")
        if np.linalg.det(R) <= 0.0:
            raise ValueError("rotation must have det +1")
        if not np.all(np.isfinite(tau)):
            raise NonFinite("translation must be finite")
        object.__setattr__(self, "R", R)
        object.__setattr__(self, "tau", tau)

    @classmethod
    def identity(cls) -> RigidMotion:
        return cls()

    @classmethod
    def translation(cls, tau) -> RigidMotion:
        return cls(np.eye(3), tau)

    @classmethod
    def random(cls, rng: np.random.Generator, spread: float = 1.0) -> RigidMotion:
        return cls(random_rotation(rng), rng.uniform(-spread, spread, 3))

    def __call__(self, p) -> np.ndarray:
        return self.R @ np.asarray(p, dtype=float) + self.tau

    def apply_direction(self, d) -> np.ndarray:
        return self.R @ np.asarray(d, dtype=float)

    def inverse(self) -> RigidMotion:
        return RigidMotion(self.R.T, -self.R.T @ self.tau)

    def compose(self, other: RigidMotion) -> RigidMotion:
        """self after other."""
        return RigidMotion(self.R @ other.R, self.R @ other.tau + self.tau)

    def matrix(self) -> np.ndarray:
        T = np.eye(4)
        T[:3, :3] = self.R
        T[:3, 3] = self.tau
        return T


def random_rotation(rng: np.random.Generator) -> np.ndarray:
    Qm, Rm = np.linalg.qr(rng.standard_normal((3, 3)))
    Qm = Qm * np.sign(np.diag(Rm))
    if np.linalg.det(Qm) < 0:
        Qm[:, 0] = -Qm[:, 0]
    return Qm


def transform(q: Quadric, m: RigidMotion) -> Quadric:
    """Pullback: the returned q' satisfies evaluate(q', p) == evaluate(q, m(p))."""
    T = m.matrix()
    return Quadric.from_homogeneous(T.T @ q.homogeneous() @ T)


def fit_quadric(points) -> Quadric:
    """Quadric through the given points: null vector of the monomial design matrix."""
    P = np.asarray(points, dtype=float)
    x, y, z = P[:, 0], P[:, 1], P[:, 2]
    one = np.ones_like(x)
    # columns follow COEFF_NAMES; the constant column carries -k
    D = np.column_stack([x * x, y * y, z * z, 2 * y * z, 2 * z * x, 2 * x * y,
                         2 * x, 2 * y, 2 * z, -one])
    _, _, Vt = np.linalg.svd(D)
    return Quadric.from_vector(Vt[-1])


@dataclass(frozen=True)
class Plane3:
    """{p : n.p = d} with unit normal n."""

    n: np.ndarray
    d: float

    def __post_init__(self):
        n = _frozen(self.n, (3,))
        if abs(np.linalg.norm(n) - 1.0) > 1e-12:
            raise ValueError("plane normal must be unit length")
        if not math.isfinite(self.d):
            raise NonFinite("plane offset must be finite")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "d", float(self.d))

    @classmethod
    def through(cls, point, normal) -> Plane3:
        n = unit(normal)
        return cls(n, float(n @ np.asarray(point, dtype=float)))

    @classmethod
    def from_coefficients(cls, A, B, C, D) -> Plane3:
        """A x + B y + C z = D."""
        v = np.array([A, B, C], dtype=float)
        s = np.linalg.norm(v)
        if s == 0.0:
            raise ValueError("plane coefficients A, B, C all zero")
        return cls(v / s, float(D) / s)

    def signed_distance(self, p) -> float:
        return float(self.n @ np.asarray(p, dtype=float) - self.d)

    def foot(self) -> np.ndarray:
        return self.d * self.n

    def moved(self, m: RigidMotion) -> Plane3:
        """Image of the plane under m."""
        return Plane3.through(m(self.foot()), m.apply_direction(self.n))


@dataclass(frozen=True)
class Line3:
    p0: np.ndarray
    u: np.ndarray

    def __post_init__(self):
        u = _frozen(self.u, (3,))
        if abs(np.linalg.norm(u) - 1.0) > 1e-12:
            raise ValueError("line direction must be unit length")
        object.__setattr__(self, "p0", _frozen(self.p0, (3,)))
        object.__setattr__(self, "u", u)

    @classmethod
    def through(cls, point, direction) -> Line3:
        return cls(np.asarray(point, dtype=float), unit(direction))

    def point_at(self, t: float) -> np.ndarray:
        return self.p0 + t * self.u

    def sample(self, n: int, span: float = 1.0) -> np.ndarray:
        return np.array([self.point_at(t) for t in np.linspace(-span, span, n)])

    def moved(self, m: RigidMotion) -> Line3:
        return Line3.through(m(self.p0), m.apply_direction(self.u))

    def distance_to(self, p) -> float:
        w = np.asarray(p, dtype=float) - self.p0
        return float(np.linalg.norm(w - (w @ self.u) * self.u))


def line_distance(l1: Line3, l2: Line3) -> float:
    """Shortest distance between two lines (0 when they meet)."""
    cr = np.cross(l1.u, l2.u)
    w = l2.p0 - l1.p0
    s = np.linalg.norm(cr)
    if s < 1e-12:
        return l1.distance_to(l2.p0)
    return float(abs(w @ cr) / s)


@dataclass(frozen=True)
class Ellipse3:
    center: np.ndarray
    e_major: np.ndarray
    e_minor: np.ndarray
    a_major: float
    a_minor: float

    def __post_init__(self):
        c = _frozen(self.center, (3,))
        e1 = _frozen(self.e_major, (3,))
        e2 = _frozen(self.e_minor, (3,))
        for e in (e1, e2):
            if abs(np.linalg.norm(e) - 1.0) > 1e-12:
                raise ValueError("ellipse axis directions must be unit length")
        if abs(e1 @ e2) > 1e-12:
            raise ValueError("ellipse axes must be orthogonal")
        if not (self.a_major >= self.a_minor > 0.0):
            raise ValueError("need a_major >= a_minor > 0")
        object.__setattr__(self, "center", c)
        object.__setattr__(self, "e_major", e1)
        object.__setattr__(self, "e_minor", e2)
        object.__setattr__(self, "a_major", float(self.a_major))
        object.__setattr__(self, "a_minor", float(self.a_minor))

    @classmethod
    def in_xy(cls, a: float, b: float, center=(0.0, 0.0, 0.0)) -> Ellipse3:
        """Axis-aligned ellipse in the plane z = center_z, major axis along x."""
        return cls(np.asarray(center, float), np.array([1.0, 0, 0]),
                   np.array([0, 1.0, 0]), a, b)

    @property
    def normal(self) -> np.ndarray:
        return np.cross(self.e_major, self.e_minor)

    def point_at(self, theta: float) -> np.ndarray:
        return (self.center + self.a_major * math.cos(theta) * self.e_major
                + self.a_minor * math.sin(theta) * self.e_minor)

    def sample(self, n: int) -> np.ndarray:
        return np.array([self.point_at(t)
                         for t in np.linspace(0, 2 * np.pi, n, endpoint=False)])


@dataclass(frozen=True)
class Cone3:
    """A quadric cone with known vertex.

    ``axis`` and ``half_angle`` are set only for right circular cones.
    """

    vertex: np.ndarray
    quadric: Quadric
    axis: np.ndarray | None = None
    half_angle: float | None = None
    residual_eps: float = DEFAULT_TOL.residual_eps

    def __post_init__(self):
        v = _frozen(self.vertex, (3,))
        object.__setattr__(self, "vertex", v)
        if self.axis is not None:
            object.__setattr__(self, "axis", _frozen(unit(self.axis), (3,)))
        if self.half_angle is not None and not 0.0 < self.half_angle < math.pi / 2:
            raise ValueError("half-angle must lie in (0, pi/2)")
        s = self.quadric.scale()
        scale_v = 1.0 + v @ v
        if abs(evaluate(self.quadric, v)) > self.residual_eps * s * scale_v:
            raise ValueError("vertex is not on the cone")
        if np.linalg.norm(gradient(self.quadric, v)) > self.residual_eps * s * scale_v:
            raise ValueError("gradient does not vanish at the vertex")

    @classmethod
    def right(cls, vertex, axis, half_angle: float) -> Cone3:
        """((p-O).w)^2 cos^2(theta) ... i.e. ((p-O).w)^2 = cos^2(theta) |p-O|^2."""
        O = np.asarray(vertex, dtype=float)
        w = unit(axis)
        c2 = math.cos(half_angle) ** 2
        Q3 = np.outer(w, w) - c2 * np.eye(3)
        q = Quadric.from_parts(Q3, -Q3 @ O, O @ Q3 @ O)
        return cls(O, q, w, half_angle)

    def contains(self, p, eps: float | None = None) -> bool:
        eps = self.residual_eps if eps is None else eps
        return relative_residual(self.quadric, p) < eps
