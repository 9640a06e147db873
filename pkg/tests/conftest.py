import sys
from pathlib import Path

import numpy as np
import pytest

from quadrilab.canonical import QC, _canonical_quadric
from quadrilab.core import Quadric, RigidMotion, transform

TESTS = Path(__file__).parent
sys.path.insert(0, str(TESTS))

_VERDICTS = []


@pytest.fixture
def verdict():
    """Record one PASS/FAIL line per acceptance criterion."""
    def record(label: str, passed: bool, detail: str = ""):
        line = f"{'PASS' if passed else 'FAIL'} {label}" + (f" :: {detail}" if detail else "")
        _VERDICTS.append(line)
        print(line)
        return passed
    return record


def pytest_terminal_summary(terminalreporter):
    if _VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in _VERDICTS:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_axes(rng, n=3, lo=0.5, hi=3.0):
    return tuple(sorted(rng.uniform(lo, hi, n), reverse=True))


def posed(cls, axes=(), params=(), rng=None, spread=2.0):
    """Canonical quadric of the class moved by a random rigid motion."""
    q = _canonical_quadric(cls, axes, params)
    m = RigidMotion.random(rng, spread)
    return transform(q, m)


def random_ellipsoid(rng):
    return posed(QC.Ellipsoid, random_axes(rng), rng=rng)


def random_quadric(rng, min_quad=1e-2):
    """Coefficients U[-1, 1]; reject near-zero quadratic parts."""
    while True:
        v = rng.uniform(-1.0, 1.0, 10)
        q = Quadric.from_vector(v)
        if np.max(np.abs(np.linalg.eigvalsh(q.quadratic_matrix()))) > min_quad:
            return q
