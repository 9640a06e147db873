"""Director-sphere check on random posed ellipsoids.

For each ellipsoid, draw several perpendicular tangent triples and report
the worst relative deviation of their common point from the sphere.
"""

import argparse
from dataclasses import dataclass

import numpy as np

from quadrilab.canonical import QC, _canonical_quadric
from quadrilab.core import RigidMotion, transform
from quadrilab.tangency import monge_sphere, perpendicular_tangent_triple


@dataclass
class Config:
    ellipsoids: int = 200
    triples: int = 5
    seed: int = 0


def run(cfg: Config) -> float:
    rng = np.random.default_rng(cfg.seed)
    worst = 0.0
    for _ in range(cfg.ellipsoids):
        axes = tuple(sorted(rng.uniform(0.5, 3.0, 3), reverse=True))
        q = transform(_canonical_quadric(QC.Ellipsoid, axes, ()), RigidMotion.random(rng, 2.0))
        s = monge_sphere(q)
        for _ in range(cfg.triples):
            t = perpendicular_tangent_triple(q, int(rng.integers(2**32)))
            dev = abs(np.linalg.norm(t.point - s.center) - s.radius) / s.radius
            worst = max(worst, dev)
    return worst


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for k, v in vars(Config()).items():
        ap.add_argument(f"--{k}", type=type(v), default=v)
    cfg = Config(**vars(ap.parse_args()))
    print(f"{cfg.ellipsoids} ellipsoids x {cfg.triples} triples: "
          f"max relative deviation {run(cfg):.3e}")


if __name__ == "__main__":
    main()
