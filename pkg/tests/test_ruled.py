import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import posed, random_axes
from quadrilab.canonical import QC, proportionality_error, reduce
from quadrilab.core import Line3, Quadric, line_distance, unit
from quadrilab.errors import NonPositiveParameter, NoRealBeta, NotOnSurface, NotRuled
from quadrilab.ruled import (line_pair_beta, line_residual, plane_section_line_pair,
                             revolution_hyperboloid, rulings_through_point, skew,
                             surface_from_lines, wren_construction, wren_generator)
from quadrilab.sections import CC

seeds = st.integers(0, 2**32 - 1)


def _point_on_hyp1(cf, rng):
    a, b, c = cf.axes
    th, z = rng.uniform(0, 2 * math.pi), rng.uniform(-1.5, 1.5)
    r = math.sqrt(1 + z * z)
    return cf.to_original(np.array([a * r * math.cos(th), b * r * math.sin(th), c * z]))


def test_hyperboloid_throat_rulings():
    q = Quadric(a=1, a1=1, a2=-1, k=1)
    pair = rulings_through_point(reduce(q), [1, 0, 0])
    dirs = sorted(tuple(np.round(unit(l.u) * np.sign(l.u[2]), 12)) for l in pair.lines)
    s = 1 / math.sqrt(2)
    assert np.allclose(dirs, [(0, -s, s), (0, s, s)])
    for line in pair.lines:
        assert line_residual(q, line) < 1e-12


def test_saddle_rulings_through_origin():
    q = Quadric(a=1, a1=-1, c2=-0.5)             # z = x^2 - y^2
    pair = rulings_through_point(reduce(q), [0, 0, 0])
    for line in pair.lines:
        assert line_residual(q, line) < 1e-12
    assert np.linalg.norm(np.cross(unit(pair.a.u), unit(pair.b.u))) > 0.5


@given(seeds)
@settings(max_examples=40)
def test_random_hyperboloid_rulings(seed):
    rng = np.random.default_rng(seed)
    q = posed(QC.HyperboloidOneSheet, random_axes(rng), rng=rng)
    cf = reduce(q)
    p = _point_on_hyp1(cf, rng)
    pair = rulings_through_point(cf, p)
    for line in pair.lines:
        assert line_residual(q, line) < 1e-9
    # two distinct lines through p
    assert np.linalg.norm(np.cross(unit(pair.a.u), unit(pair.b.u))) > 1e-6


@given(seeds)
@settings(max_examples=30)
def test_same_family_skew_opposite_families_meet(seed):
    rng = np.random.default_rng(seed)
    q = posed(QC.HyperboloidOneSheet, random_axes(rng), rng=rng)
    cf = reduce(q)
    p1, p2 = _point_on_hyp1(cf, rng), _point_on_hyp1(cf, rng)
    r1, r2 = rulings_through_point(cf, p1), rulings_through_point(cf, p2)
    if np.linalg.norm(p1 - p2) < 1e-2:
        return
    scale = max(cf.axes)
    # same-family lines are skew or parallel, never meeting at a finite point
    d_same = line_distance(r1.a, r2.a)
    par = np.linalg.norm(np.cross(unit(r1.a.u), unit(r2.a.u))) < 1e-9
    assert par or d_same > 1e-9 * scale
    # opposite families are coplanar
    n = np.cross(r1.a.u, r2.b.u)
    if np.linalg.norm(n) > 1e-6:
        assert abs(unit(n) @ (r2.b.p0 - r1.a.p0)) < 1e-8 * scale


def test_rulings_errors():
    with pytest.raises(NotRuled):
        rulings_through_point(reduce(Quadric.sphere()), [1, 0, 0])
    with pytest.raises(NotOnSurface):
        rulings_through_point(reduce(Quadric(a=1, a1=1, a2=-1, k=1)), [0, 0, 0])


def test_wren_unit():
    w = wren_construction(1.0, 1.0, 0.0)
    assert w.gh == pytest.approx(1.0)
    angle = math.degrees(math.acos(abs(unit(w.line.u) @ [0, 0, 1])))
    assert angle == pytest.approx(45.0)
    assert line_residual(revolution_hyperboloid(1, 1), w.line) < 1e-12


@given(st.floats(0.2, 5), st.floats(0.2, 5), st.floats(-3, 3))
def test_wren_line_on_surface(a, b, z0):
    w = wren_construction(a, b, z0)
    q = revolution_hyperboloid(a, b)
    assert line_residual(q, w.line) < 1e-10
    assert w.gh == pytest.approx(a)
    assert np.linalg.norm(w.H) ** 2 - np.linalg.norm(w.G) ** 2 == pytest.approx(a * a)
    assert line_distance(w.line, Line3.through(w.N, [1, 0, 0])) < 1e-9 * (1 + a)


def test_wren_rejects_bad_parameters():
    with pytest.raises(NonPositiveParameter):
        wren_generator(0.0, 1.0, 0.0)
    with pytest.raises(NonPositiveParameter):
        wren_generator(1.0, -1.0, 0.0)


@given(st.floats(0.1, 4), st.floats(0.1, 4), st.floats(-5, 5))
def test_line_pair_beta_formula(P, P1, alpha):
    beta = line_pair_beta(P, P1, alpha)
    # oracle: y = alpha x + beta touches the throat ellipse P x^2 + P' y^2 = 1
    A = P + P1 * alpha * alpha
    B = 2 * P1 * alpha * beta
    C = P1 * beta * beta - 1
    assert B * B - 4 * A * C == pytest.approx(0.0, abs=1e-8 * (B * B + abs(4 * A * C) + 1))


def test_line_pair_beta_rejects():
    with pytest.raises(NoRealBeta):
        line_pair_beta(1.0, -1.0, 0.0)


@pytest.mark.parametrize("alpha", [0.0, 0.5, -2.0])
def test_plane_section_line_pair(alpha):
    q = Quadric(a=1 / 4, a1=1, a2=-1, k=1)
    beta, sec = plane_section_line_pair(reduce(q), alpha)
    assert beta > 0 and sec.cls is CC.TwoLines


def test_plane_section_line_pair_not_ruled():
    with pytest.raises(NotRuled):
        plane_section_line_pair(reduce(Quadric(a=1, a1=1, c2=-0.5)), 0.0)


@given(seeds)
@settings(max_examples=25)
def test_three_skew_lines_recover_surface(seed):
    rng = np.random.default_rng(seed)
    q = posed(QC.HyperboloidOneSheet, random_axes(rng, lo=0.8, hi=2.0), rng=rng)
    cf = reduce(q)
    lines = [rulings_through_point(cf, _point_on_hyp1(cf, rng)).a for _ in range(3)]
    if not all(skew(lines[i], lines[j], 1e-3) for i, j in ((0, 1), (0, 2), (1, 2))):
        return
    fit = surface_from_lines(lines)
    assert proportionality_error(fit, q) < 1e-6
