"""Random planes against the conoid section verifiers; prints pass counts
and the worst residual per check."""

import argparse
import math
from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from quadrilab.archimedes import ConoidSpec, verify_cs12, verify_cs13
from quadrilab.core import Plane3, unit
from quadrilab.errors import GeometryError


@dataclass
class Config:
    trials: int = 500
    seed: int = 1


def _tilted(rng, max_tilt):
    t, p = rng.uniform(0.05, max_tilt), rng.uniform(0, 2 * math.pi)
    return unit([math.sin(t) * math.cos(p), math.sin(t) * math.sin(p), math.cos(t)])


def run(cfg: Config):
    rng = np.random.default_rng(cfg.seed)
    stats = {"ortoconoide": [0, 0], "ambliconoide": [0, 0]}
    worst = defaultdict(float)
    for _ in range(cfg.trials):
        spec = ConoidSpec.ortoconoide(rng.uniform(0.3, 3))
        try:
            v = verify_cs12(spec, Plane3(_tilted(rng, 1.4), rng.uniform(0.1, 3)))
        except GeometryError:
            continue
        stats["ortoconoide"][0] += v.ok
        stats["ortoconoide"][1] += 1
        for k, r in v.residuals.items():
            if k.endswith("_residual"):
                worst[f"cs12.{k}"] = max(worst[f"cs12.{k}"], r)
    for _ in range(cfg.trials):
        a, b = rng.uniform(0.5, 2, 2)
        spec = ConoidSpec.ambliconoide(a, b)
        try:
            v = verify_cs13(spec, Plane3(_tilted(rng, 0.9 * math.atan(b / a)),
                                         rng.uniform(1.2, 4) * b))
        except GeometryError:
            continue
        stats["ambliconoide"][0] += v.ok
        stats["ambliconoide"][1] += 1
        for k, r in v.residuals.items():
            if k.endswith("_residual"):
                worst[f"cs13.{k}"] = max(worst[f"cs13.{k}"], r)
    return stats, dict(worst)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for k, v in vars(Config()).items():
        ap.add_argument(f"--{k}", type=type(v), default=v)
    cfg = Config(**vars(ap.parse_args()))
    stats, worst = run(cfg)
    for name, (ok, n) in stats.items():
        print(f"{name}: {ok}/{n} verified")
    for k in sorted(worst):
        print(f"  {k}: {worst[k]:.3e}")


if __name__ == "__main__":
    main()
