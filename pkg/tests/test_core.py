import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quadrilab.core import (Cone3, Ellipse3, Line3, Plane3, Quadric, RigidMotion, Tolerance,
                            evaluate, fit_quadric, gradient, line_distance, quadric_from_general,
                            relative_residual, transform, unit)
from quadrilab.errors import AllZero, NonFinite

coef = st.floats(-5, 5, allow_nan=False)
vec3 = st.lists(st.floats(-3, 3, allow_nan=False), min_size=3, max_size=3).map(np.array)
seeds = st.integers(0, 2**32 - 1)


class TestQuadric:
    def test_all_zero_rejected(self):
        with pytest.raises(AllZero):
            Quadric()

    def test_non_finite_rejected(self):
        with pytest.raises(NonFinite):
            Quadric(a=math.nan)
        with pytest.raises(NonFinite):
            Quadric(a=1.0, k=math.inf)

    def test_matrices_agree_with_evaluate(self):
        q = Quadric.from_vector([1, 2, 3, 0.5, -0.25, 0.75, 1, -1, 0.5, 2])
        p = np.array([0.3, -1.2, 2.0])
        ph = np.append(p, 1.0)
        assert evaluate(q, p) == pytest.approx(ph @ q.homogeneous() @ ph)
        assert Quadric.from_homogeneous(q.homogeneous()) == q
        assert Quadric.from_parts(q.quadratic_matrix(), q.linear(), -q.k) == q

    def test_sphere_and_ellipsoid(self):
        s = Quadric.sphere((1, 2, 3), 2.0)
        assert evaluate(s, [3, 2, 3]) == pytest.approx(0.0)
        e = Quadric.axis_ellipsoid(3, 2, 1)
        for p in ([3, 0, 0], [0, 2, 0], [0, 0, 1]):
            assert evaluate(e, p) == pytest.approx(0.0)

    def test_general_equation_mapping(self):
        # alpha z^2 + beta yz + gamma zx + delta y^2 + eps xy + zeta x^2
        # + eta x + theta y + iota z + kappa = 0
        q = quadric_from_general(alpha=1, beta=2, gamma=3, delta=4, epsilon=5, zeta=6,
                                 eta=7, theta=8, iota=9, kappa=10)
        x, y, z = 0.3, -0.7, 1.1
        direct = (z * z + 2 * y * z + 3 * z * x + 4 * y * y + 5 * x * y + 6 * x * x
                  + 7 * x + 8 * y + 9 * z + 10)
        assert evaluate(q, [x, y, z]) == pytest.approx(direct)

    @given(st.lists(coef, min_size=10, max_size=10), vec3)
    def test_gradient_matches_finite_difference(self, v, p):
        if not any(v):
            return
        q = Quadric.from_vector(v)
        h = 1e-6
        fd = [(evaluate(q, p + h * e) - evaluate(q, p - h * e)) / (2 * h) for e in np.eye(3)]
        assert np.allclose(gradient(q, p), fd, atol=1e-5 * (1 + q.scale()))

    def test_relative_residual_scale_free(self):
        q = Quadric.axis_ellipsoid(2, 1, 1)
        p = [1.0, 1.0, 0.0]
        assert relative_residual(q, p) == pytest.approx(relative_residual(q.scaled(-7.0), p))


class TestTolerance:
    def test_defaults(self):
        t = Tolerance()
        assert (t.rank_eps, t.residual_eps, t.iter_max) == (1e-9, 1e-8, 64)

    @pytest.mark.parametrize("kw", [{"rank_eps": 0}, {"residual_eps": -1}, {"iter_max": 0}])
    def test_invalid(self, kw):
        with pytest.raises(ValueError):
            Tolerance(**kw)


class TestMotion:
    @given(seeds, vec3)
    def test_pullback(self, seed, p):
        rng = np.random.default_rng(seed)
        q = Quadric.from_vector(rng.uniform(-1, 1, 10))
        m = RigidMotion.random(rng, 2.0)
        assert evaluate(transform(q, m), p) == pytest.approx(evaluate(q, m(p)), abs=1e-9)

    @given(seeds, vec3)
    def test_inverse_and_compose(self, seed, p):
        rng = np.random.default_rng(seed)
        m1, m2 = RigidMotion.random(rng), RigidMotion.random(rng)
        assert np.allclose(m1.inverse()(m1(p)), p)
        assert np.allclose(m1.compose(m2)(p), m1(m2(p)))

    def test_rejects_reflection(self):
        with pytest.raises(ValueError):
            RigidMotion(np.diag([1.0, 1.0, -1.0]), np.zeros(3))


class TestPrimitives:
    def test_plane(self):
        pl = Plane3.from_coefficients(0, 0, 2, 4)
        assert np.allclose(pl.n, [0, 0, 1]) and pl.d == 2.0
        assert pl.signed_distance([5, 5, 3]) == pytest.approx(1.0)
        with pytest.raises(ValueError):
            Plane3(np.array([1.0, 1.0, 0.0]), 0.0)

    def test_plane_moved(self):
        rng = np.random.default_rng(5)
        m = RigidMotion.random(rng)
        pl = Plane3.through([1, 2, 3], [0, 1, 1])
        moved = pl.moved(m)
        assert moved.signed_distance(m([1, 2, 3])) == pytest.approx(0.0, abs=1e-12)

    def test_lines(self):
        l1 = Line3.through([0, 0, 0], [1, 0, 0])
        l2 = Line3.through([0, 1, 5], [0, 0, 1])
        assert line_distance(l1, l2) == pytest.approx(1.0)
        assert line_distance(l1, Line3.through([0, 2, 0], [2, 0, 0])) == pytest.approx(2.0)

    def test_ellipse(self):
        e = Ellipse3.in_xy(2, 1)
        pts = e.sample(8)
        assert np.allclose(pts[:, 0] ** 2 / 4 + pts[:, 1] ** 2, 1.0)
        with pytest.raises(ValueError):
            Ellipse3.in_xy(1, 2)

    def test_right_cone(self):
        c = Cone3.right([0, 0, 1], [0, 0, -1], math.pi / 4)
        assert c.contains([1, 0, 0]) and c.contains([0, -2, -1])
        assert not c.contains([0.5, 0, 0])

    def test_cone_rejects_bad_vertex(self):
        with pytest.raises(ValueError):
            Cone3(np.array([0.0, 0.0, 0.5]), Quadric(a=1, a1=1, a2=-1))

    @given(seeds)
    @settings(max_examples=30)
    def test_fit_recovers_quadric(self, seed):
        rng = np.random.default_rng(seed)
        e = Quadric.axis_ellipsoid(*rng.uniform(0.5, 3, 3))
        m = RigidMotion.random(rng)
        q = transform(e, m)
        dirs = np.array([unit(d) for d in rng.normal(size=(12, 3))])
        a, b, c = 1 / np.sqrt([e.a, e.a1, e.a2])
        pts = [m.inverse()(d * [a, b, c]) for d in dirs]
        fit = fit_quadric(pts)
        v, w = fit.vector(), q.vector()
        s = (v @ w) / (v @ v)
        assert np.max(np.abs(s * v - w)) < 1e-8 * np.max(np.abs(w))
