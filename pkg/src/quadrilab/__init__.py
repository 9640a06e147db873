"""Quadric surfaces: classification, plane sections, rulings, tangency and the
classical conoid constructions."""

from .canonical import CanonicalForm, QuadricClass, classify, reduce
from .core import (DEFAULT_TOL, Cone3, Ellipse3, Line3, Plane3, Quadric, RigidMotion,
                   Tolerance, evaluate, gradient, transform)
from .sections import ConicClass, PlanarConic, plane_section

__version__ = "0.1.0"
