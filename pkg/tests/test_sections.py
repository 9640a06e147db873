import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_ellipsoid
from quadrilab.core import Plane3, Quadric, evaluate, unit
from quadrilab.errors import DegenerateConic, InsufficientSections, NotCentral
from quadrilab.sections import (CC, circular_section_planes, classify_conic, conic_similar,
                                parallel_sections_report, plane_section,
                                similarity_invariant)

seeds = st.integers(0, 2**32 - 1)


@pytest.mark.parametrize("coeffs, cls", [
    ((1, 0, 1, 0, 0, -1), CC.Circle),
    ((1, 0, 4, 0, 0, -1), CC.Ellipse),
    ((1, 0, -1, 0, 0, -1), CC.Hyperbola),
    ((1, 0, 0, 0, -0.5, 0), CC.Parabola),
    ((1, 0, -1, 0, 0, 0), CC.TwoLines),
    ((1, 0, 0, 0, 0, -1), CC.ParallelLines),
    ((1, 0, 0, 0, 0, 0), CC.OneLine),
    ((1, 0, 1, 0, 0, 0), CC.Point),
    ((1, 0, 1, 0, 0, 1), CC.Empty),
    ((0, 0, 0, 0, 0, 0), CC.WholePlane),
])
def test_classify_conic(coeffs, cls):
    assert classify_conic(coeffs) is cls


def test_ellipsoid_equator():
    sec = plane_section(Quadric.axis_ellipsoid(3, 2, 1), Plane3.from_coefficients(0, 0, 1, 0))
    assert sec.cls is CC.Ellipse
    assert np.allclose(sec.geometry.semi_axes, (3, 2))
    assert similarity_invariant(sec).ratio == pytest.approx(4 / 9)


def test_paraboloid_oblique_is_ellipse():
    q = Quadric(a=1, a1=1, c2=-0.5)
    sec = plane_section(q, Plane3.from_coefficients(-1, 0, 1, 1))
    assert sec.cls is CC.Ellipse


def test_paraboloid_axial_is_parabola():
    sec = plane_section(Quadric(a=1, a1=1, c2=-0.5), Plane3.from_coefficients(1, 0, 0, 0.3))
    assert sec.cls is CC.Parabola
    assert similarity_invariant(sec).kind == "parabola"


@given(seeds, st.floats(-0.8, 0.8))
@settings(max_examples=40)
def test_samples_lie_on_surface_and_plane(seed, d):
    rng = np.random.default_rng(seed)
    q = random_ellipsoid(rng)
    n = unit(rng.normal(size=3))
    ctr = np.linalg.solve(q.quadratic_matrix(), -q.linear())
    pl = Plane3(n, float(n @ ctr) + d * 0.5)
    sec = plane_section(q, pl)
    if sec.cls not in (CC.Ellipse, CC.Circle):
        return
    for p in sec.sample(16):
        assert abs(pl.signed_distance(p)) < 1e-10
        assert abs(evaluate(q, p)) < 1e-9 * q.scale() * (1 + p @ p)


def test_conjugate_hyperbolas_not_similar():
    q = Quadric(a=1, a1=-4, k=1)          # x^2 - 4y^2 = 1 as a cylinder
    h1 = plane_section(q, Plane3.from_coefficients(0, 0, 1, 0))
    h2 = plane_section(Quadric(a=-1, a1=4, k=1), Plane3.from_coefficients(0, 0, 1, 0))
    assert h1.cls is CC.Hyperbola and h2.cls is CC.Hyperbola
    assert similarity_invariant(h1).ratio == pytest.approx(1 / 4)
    assert similarity_invariant(h2).ratio == pytest.approx(4)
    assert not conic_similar(h1, h2)


def test_degenerate_has_no_invariant():
    sec = plane_section(Quadric(a=1, a1=1, a2=-1), Plane3.from_coefficients(1, 0, 0, 0))
    assert sec.cls is CC.TwoLines
    with pytest.raises(DegenerateConic):
        similarity_invariant(sec)


@given(seeds)
@settings(max_examples=30)
def test_parallel_sections_similar(seed):
    rng = np.random.default_rng(seed)
    q = random_ellipsoid(rng)
    n = unit(rng.normal(size=3))
    ctr = np.linalg.solve(q.quadratic_matrix(), -q.linear())
    d0 = float(n @ ctr)
    rep = parallel_sections_report(q, n, [d0 - 0.2, d0, d0 + 0.2])
    assert not rep.degenerate_offsets
    assert rep.all_similar and rep.quadratic_deviation < 1e-12


def test_insufficient_sections():
    with pytest.raises(InsufficientSections):
        parallel_sections_report(Quadric.sphere(), [0, 0, 1], [0.0, 5.0, 6.0])


@given(seeds)
@settings(max_examples=30)
def test_circular_families_give_circles(seed):
    rng = np.random.default_rng(seed)
    q = random_ellipsoid(rng)
    fam = circular_section_planes(q)
    assert fam.kind == "generic" and len(fam.normals) == 2
    for n in fam.normals:
        for off in (0.0, 0.1):
            sec = plane_section(q, Plane3(n, float(n @ fam.center) + off))
            assert sec.cls is CC.Circle


def test_circular_revolution_and_sphere():
    assert circular_section_planes(Quadric.sphere()).kind == "sphere"
    fam = circular_section_planes(Quadric.axis_ellipsoid(2, 2, 1))
    assert fam.kind == "revolution" and np.allclose(abs(fam.normals[0]), [0, 0, 1])


def test_circular_needs_centre():
    with pytest.raises(NotCentral):
        circular_section_planes(Quadric(a=1, a1=2, c2=-0.5))


def test_hyperboloid_circular_families():
    q = Quadric(a=1 / 9, a1=1 / 4, a2=-1, k=1)
    fam = circular_section_planes(q)
    for n in fam.normals:
        assert plane_section(q, Plane3(n, 0.0)).cls is CC.Circle
    assert all(math.isclose(np.linalg.norm(n), 1.0) for n in fam.normals)
