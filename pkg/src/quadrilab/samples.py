"""Point samples of surfaces, plane sections and lines for external plotting."""

from __future__ import annotations

import numpy as np

from .canonical import QC, CanonicalForm, reduce
from .core import DEFAULT_TOL, Line3, Quadric, Tolerance, relative_residual
from .errors import NoParametrization
from .sections import PlanarConic

SPAN = 1.5


def _grid(n):
    return np.meshgrid(np.linspace(-SPAN, SPAN, n), np.linspace(-SPAN, SPAN, n), indexing="ij")


def _canonical_grid(cf: CanonicalForm, n: int) -> np.ndarray:
    """n x n parameter grid on the canonical surface."""
    cls = cf.cls
    s, t = _grid(n)
    th = np.linspace(0.0, 2 * np.pi, n, endpoint=False)
    if cls is QC.Ellipsoid:
        a, b, c = cf.axes
        ph = np.linspace(0.0, np.pi, n)
        T, P = np.meshgrid(th, ph, indexing="ij")
        pts = [a * np.sin(P) * np.cos(T), b * np.sin(P) * np.sin(T), c * np.cos(P)]
    elif cls is QC.HyperboloidOneSheet:
        a, b, c = cf.axes
        T, S = np.meshgrid(th, np.linspace(-SPAN, SPAN, n), indexing="ij")
        pts = [a * np.cosh(S) * np.cos(T), b * np.cosh(S) * np.sin(T), c * np.sinh(S)]
    elif cls is QC.HyperboloidTwoSheets:
        a, b, c = cf.axes
        T, S = np.meshgrid(th, np.linspace(-SPAN, SPAN, n), indexing="ij")
        sheet = np.where(S >= 0, 1.0, -1.0)
        S = np.abs(S)
        pts = [a * np.sinh(S) * np.cos(T), b * np.sinh(S) * np.sin(T), sheet * c * np.cosh(S)]
    elif cls is QC.Cone:
        a, b, c = cf.axes
        T, S = np.meshgrid(th, np.linspace(-SPAN, SPAN, n), indexing="ij")
        pts = [a * S * np.cos(T), b * S * np.sin(T), c * S]
    elif cls is QC.EllipticParaboloid:
        P, P1 = cf.params
        pts = [s, t, P * s * s + P1 * t * t]
    elif cls is QC.HyperbolicParaboloid:
        P, P1 = cf.params
        pts = [s, t, P * s * s - P1 * t * t]
    elif cls is QC.ParabolicCylinder:
        (P,) = cf.params
        pts = [s, t, P * s * s]
    elif cls is QC.EllipticCylinder:
        a, b = cf.axes
        T, S = np.meshgrid(th, np.linspace(-SPAN, SPAN, n), indexing="ij")
        pts = [a * np.cos(T), b * np.sin(T), S]
    elif cls is QC.HyperbolicCylinder:
        a, b = cf.axes
        sheet = np.where(s >= 0, 1.0, -1.0)
        pts = [sheet * a * np.cosh(t), b * np.sinh(t), s]
    elif cls is QC.IntersectingPlanes:
        a, b = cf.axes
        sheet = np.where(s >= 0, 1.0, -1.0)
        pts = [a * t, sheet * b * t, s]
    elif cls is QC.ParallelPlanes:
        (a,) = cf.axes
        sheet = np.where(s >= 0, 1.0, -1.0)
        pts = [sheet * a, t, s]
    elif cls is QC.CoincidentPlanes:
        pts = [np.zeros_like(s), t, s]
    else:
        raise NoParametrization(f"{cls} has no real parametrisation")
    return np.column_stack([np.ravel(x) for x in pts])


def surface_samples(q: Quadric, n: int, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    if n < 2:
        raise ValueError("need at least two samples")
    cf = reduce(q, tol)
    pts = _canonical_grid(cf, n)
    return np.array([cf.from_canonical(p) for p in pts])


def emit_samples(obj, n: int, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """n points of a curve (PlanarConic, Line3) or an n x n grid on a surface."""
    if n < 2:
        raise ValueError("need at least two samples")
    if isinstance(obj, Quadric):
        return surface_samples(obj, n, tol)
    if isinstance(obj, PlanarConic):
        return obj.sample(n)
    if isinstance(obj, Line3):
        return obj.sample(n)
    raise TypeError(f"cannot sample {type(obj).__name__}")


def max_residual(q: Quadric, pts) -> float:
    return max((relative_residual(q, p) for p in pts), default=0.0)
