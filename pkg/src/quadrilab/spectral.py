"""Eigen-decomposition of the quadratic part, with the characteristic cubic and centre system built on it."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import DEFAULT_TOL, Plane3, Quadric, Tolerance, unit
from .errors import NoConvergence

_SWEEP = ((0, 1), (0, 2), (1, 2))


@dataclass(frozen=True)
class SpectralData:
    eigenvalues: np.ndarray     # descending
    frame: np.ndarray           # columns are eigenvectors, det +1
    rank3: int
    signature: tuple[int, int, int]   # (n_pos, n_neg, n_zero)
    sweeps: int = 0


@dataclass(frozen=True)
class CubicCoeffs:
    c3: float
    c2: float
    c1: float
    c0: float

    def as_tuple(self):
        return (self.c3, self.c2, self.c1, self.c0)

    def roots(self) -> np.ndarray:
        """Real roots (numpy companion-matrix route, independent of the Jacobi sweep)."""
        coeffs = np.array(self.as_tuple())
        nz = np.flatnonzero(np.abs(coeffs) > 1e-14 * np.max(np.abs(coeffs)))
        r = np.roots(coeffs[nz[0]:])
        return np.sort(r.real)


def _off(A):
    return math.sqrt(2.0 * (A[0, 1] ** 2 + A[0, 2] ** 2 + A[1, 2] ** 2))


def _canonical_sign(v):
    for x in v:
        if abs(x) > 1e-12:
            return v if x > 0 else -v
    return v


def eigen_symmetric3(Q3, tol: Tolerance = DEFAULT_TOL) -> SpectralData:
    """Cyclic Jacobi on a symmetric 3x3 matrix.

    Rotations are applied in the fixed order (0,1), (0,2), (1,2).  Raises
    NoConvergence if the off-diagonal norm has not vanished (relative to
    the Frobenius norm) after ``tol.iter_max`` sweeps, or if a sweep fails
    to decrease it.
    """
    A = np.array(Q3, dtype=float)
    if A.shape != (3, 3):
        raise ValueError("expected a 3x3 matrix")
    scale = np.max(np.abs(A))
    if scale > 0 and np.max(np.abs(A - A.T)) > 1e-12 * scale:
        raise ValueError("matrix is not symmetric")
    A = 0.5 * (A + A.T)
    V = np.eye(3)
    fro = np.linalg.norm(A)
    target = 1e-15 * fro
    floor = 1e-12 * fro   # below this a stalled sweep counts as converged
    off = _off(A)
    sweeps = 0
    while off > target:
        if sweeps >= tol.iter_max:
            raise NoConvergence(f"Jacobi did not converge in {tol.iter_max} sweeps")
        for p, r in _SWEEP:
            apr = A[p, r]
            if apr == 0.0:
                continue
            theta = (A[r, r] - A[p, p]) / (2.0 * apr)
            t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
            c = 1.0 / math.sqrt(t * t + 1.0)
            s = t * c
            J = np.eye(3)
            J[p, p] = J[r, r] = c
            J[p, r] = s
            J[r, p] = -s
            A = J.T @ A @ J
            A[p, r] = A[r, p] = 0.0
            V = V @ J
        sweeps += 1
        new_off = _off(A)
        if new_off >= off:
            if off <= floor:
                break
            raise NoConvergence("off-diagonal norm did not decrease during a sweep")
        off = new_off

    lam = np.diag(A).copy()
    vecs = [_canonical_sign(V[:, i].copy()) for i in range(3)]
    order = sorted(range(3), key=lambda i: (-lam[i], tuple(-x for x in vecs[i])))
    lam = lam[order]
    E = np.column_stack([vecs[i] for i in order])
    if np.linalg.det(E) < 0:
        E[:, 2] = -E[:, 2]

    big = np.max(np.abs(lam))
    thr = tol.rank_eps * big
    n_pos = int(np.sum(lam > thr))
    n_neg = int(np.sum(lam < -thr))
    n_zero = 3 - n_pos - n_neg
    return SpectralData(lam, E, n_pos + n_neg, (n_pos, n_neg, n_zero), sweeps)


def characteristic_cubic(q: Quadric) -> CubicCoeffs:
    """det(s Q3 + I) expanded; its roots are s = -1/lambda for nonzero lambda."""
    Q = q.quadratic_matrix()
    minors = (Q[0, 0] * Q[1, 1] - Q[0, 1] ** 2
              + Q[1, 1] * Q[2, 2] - Q[1, 2] ** 2
              + Q[0, 0] * Q[2, 2] - Q[0, 2] ** 2)
    return CubicCoeffs(float(np.linalg.det(Q)), float(minors), float(np.trace(Q)), 1.0)


# -- centers ------------------------------------------------------------------

@dataclass(frozen=True)
class UniquePoint:
    point: np.ndarray


@dataclass(frozen=True)
class LineOfCenters:
    point: np.ndarray
    direction: np.ndarray


@dataclass(frozen=True)
class PlaneOfCenters:
    point: np.ndarray
    normal: np.ndarray


@dataclass(frozen=True)
class NoCenter:
    pass


CenterResult = UniquePoint | LineOfCenters | PlaneOfCenters | NoCenter


def _row_echelon(M, rhs, rel):
    """Gaussian elimination with partial pivoting to reduced row-echelon form.

    Pivots below ``rel`` times the largest pivot seen are treated as zero.
    Returns (M, rhs, pivot_columns).
    """
    M = M.astype(float).copy()
    rhs = rhs.astype(float).copy()
    n_rows, n_cols = M.shape
    pivots = []
    row = 0
    thr = rel * np.max(np.abs(M)) if M.size else 0.0
    for col in range(n_cols):
        if row >= n_rows:
            break
        i = row + int(np.argmax(np.abs(M[row:, col])))
        if abs(M[i, col]) <= thr:
            M[row:, col] = 0.0
            continue
        M[[row, i]] = M[[i, row]]
        rhs[[row, i]] = rhs[[i, row]]
        piv = M[row, col]
        M[row] /= piv
        rhs[row] /= piv
        for j in range(n_rows):
            if j != row and M[j, col] != 0.0:
                f = M[j, col]
                M[j] -= f * M[row]
                rhs[j] -= f * rhs[row]
        pivots.append(col)
        row += 1
    return M, rhs, pivots


def center(q: Quadric, tol: Tolerance = DEFAULT_TOL) -> CenterResult:
    """Solve Q3 c = -ell; classify the solution set."""
    Q = q.quadratic_matrix()
    ell = q.linear()
    scale = max(np.max(np.abs(Q)), np.max(np.abs(ell)))
    M, rhs, piv = _row_echelon(Q, -ell, tol.rank_eps)
    rank = len(piv)
    if np.any(np.abs(rhs[rank:]) > tol.rank_eps * scale):
        return NoCenter()
    p = np.zeros(3)
    for r, col in enumerate(piv):
        p[col] = rhs[r]
    free = [c for c in range(3) if c not in piv]
    null = []
    for fcol in free:
        v = np.zeros(3)
        v[fcol] = 1.0
        for r, col in enumerate(piv):
            v[col] = -M[r, fcol]
        null.append(v)
    if rank == 3:
        return UniquePoint(p)
    if rank == 2:
        return LineOfCenters(p, unit(null[0]))
    if rank == 1:
        return PlaneOfCenters(p, unit(np.cross(null[0], null[1])))
    # quadratic part vanishes: no quadric center in any useful sense
    return NoCenter()


def diametral_plane(q: Quadric, direction) -> Plane3:
    """Plane holding the midpoints of all chords parallel to ``direction``."""
    d = np.asarray(direction, dtype=float)
    Qd = q.quadratic_matrix() @ d
    return Plane3.from_coefficients(*Qd, -float(d @ q.linear()))
