import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from quadrilab.core import Quadric, Tolerance, random_rotation, unit
from quadrilab.errors import NoConvergence
from quadrilab.spectral import (LineOfCenters, NoCenter, PlaneOfCenters, UniquePoint,
                                center, characteristic_cubic, diametral_plane,
                                eigen_symmetric3)

seeds = st.integers(0, 2**32 - 1)


class TestJacobi:
    def test_diagonal_sorted_descending(self):
        sd = eigen_symmetric3(np.diag([1.0, 3.0, 2.0]))
        assert np.allclose(sd.eigenvalues, [3, 2, 1])
        assert np.isclose(np.linalg.det(sd.frame), 1.0)
        assert sd.signature == (3, 0, 0) and sd.rank3 == 3

    def test_signature_and_rank(self):
        sd = eigen_symmetric3(np.diag([1.0, 0.0, -2.0]))
        assert sd.signature == (1, 1, 1) and sd.rank3 == 2

    def test_sign_convention(self):
        sd = eigen_symmetric3(np.array([[2.0, 1, 0], [1, 2, 0], [0, 0, 1]]))
        for i in range(2):
            v = sd.frame[:, i]
            first = v[np.flatnonzero(np.abs(v) > 1e-12)[0]]
            assert first > 0

    @given(seeds)
    def test_matches_numpy(self, seed):
        rng = np.random.default_rng(seed)
        A = rng.uniform(-1, 1, (3, 3))
        A = A + A.T
        sd = eigen_symmetric3(A)
        assert np.allclose(sd.eigenvalues, np.sort(np.linalg.eigvalsh(A))[::-1], atol=1e-12)
        V = sd.frame
        assert np.allclose(A @ V, V * sd.eigenvalues, atol=1e-12)
        assert np.allclose(V.T @ V, np.eye(3), atol=1e-12)

    @given(seeds)
    def test_near_double_eigenvalue(self, seed):
        rng = np.random.default_rng(seed)
        R = random_rotation(rng)
        lam = np.array([1.0, 1.0 + 1e-7, -0.5])
        A = R @ np.diag(lam) @ R.T
        sd = eigen_symmetric3(0.5 * (A + A.T))
        assert np.linalg.norm(A @ sd.frame - sd.frame * sd.eigenvalues) < 1e-12

    def test_iteration_cap(self):
        rng = np.random.default_rng(0)
        A = rng.uniform(-1, 1, (3, 3))
        tight = Tolerance(iter_max=10)
        eigen_symmetric3(A + A.T, tight)   # converges well inside the cap

    def test_not_symmetric(self):
        with pytest.raises(ValueError):
            eigen_symmetric3(np.array([[1.0, 2, 0], [0, 1, 0], [0, 0, 1]]))

    def test_no_convergence_error_type(self):
        assert issubclass(NoConvergence, ValueError)


class TestCubic:
    @given(seeds)
    def test_roots_are_negative_reciprocals(self, seed):
        rng = np.random.default_rng(seed)
        q = Quadric.from_vector(rng.uniform(-1, 1, 10))
        lam = np.linalg.eigvalsh(q.quadratic_matrix())
        if np.min(np.abs(lam)) < 1e-3:
            return
        roots = characteristic_cubic(q).roots()
        assert np.allclose(np.sort(roots), np.sort(-1.0 / lam), rtol=1e-8, atol=1e-8)

    def test_coefficients(self):
        q = Quadric(a=1, a1=2, a2=3, k=1)
        assert characteristic_cubic(q).as_tuple() == pytest.approx((6, 11, 6, 1))


class TestCenter:
    def test_unique(self):
        c = center(Quadric.sphere((1, -2, 3), 2.0))
        assert isinstance(c, UniquePoint) and np.allclose(c.point, [1, -2, 3])

    def test_line(self):
        c = center(Quadric(a=1, a1=1, c=-1, k=1))  # (x-1)^2 + y^2 = 2
        assert isinstance(c, LineOfCenters)
        assert np.allclose(abs(c.direction), [0, 0, 1]) and np.isclose(c.point[0], 1)

    def test_plane(self):
        c = center(Quadric(a=1, k=4))
        assert isinstance(c, PlaneOfCenters) and np.allclose(abs(c.normal), [1, 0, 0])

    def test_none_for_paraboloid(self):
        assert isinstance(center(Quadric(a=1, a1=1, c2=-0.5)), NoCenter)

    def test_diametral_plane_holds_chord_midpoints(self):
        q = Quadric.axis_ellipsoid(3, 2, 1)
        d = unit([1.0, 2.0, -1.0])
        pl = diametral_plane(q, d)
        # chords along d through points of the ellipsoid
        rng = np.random.default_rng(1)
        for _ in range(5):
            p0 = rng.normal(size=3) * 0.3
            Q = q.quadratic_matrix()
            a2, a1 = d @ Q @ d, 2 * d @ (Q @ p0 + q.linear())
            a0 = p0 @ Q @ p0 + 2 * q.linear() @ p0 - q.k
            t = np.roots([a2, a1, a0]).real
            mid = p0 + t.mean() * d
            assert abs(pl.signed_distance(mid)) < 1e-12
