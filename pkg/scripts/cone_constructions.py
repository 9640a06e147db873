"""Sweep the apex positions of both cone-over-ellipse constructions and
tabulate containment residuals and the branch taken."""

import argparse
from collections import Counter
from dataclasses import dataclass

import numpy as np

from quadrilab.archimedes import (cone_through_ellipse_oblique,
                                  cone_through_ellipse_perpendicular)
from quadrilab.core import Ellipse3


@dataclass
class Config:
    a: float = 2.0
    b: float = 1.0
    steps: int = 41


def run(cfg: Config):
    e = Ellipse3.in_xy(cfg.a, cfg.b)
    worst_perp = max(cone_through_ellipse_perpendicular(e, h).residual
                     for h in np.geomspace(1e-3, 1e2, cfg.steps))
    branches = Counter()
    worst_obl = 0.0
    for x0 in np.linspace(-3 * cfg.a, 3 * cfg.a, cfg.steps):
        for h in np.linspace(0.1, 4.0, cfg.steps):
            c = cone_through_ellipse_oblique(e, [x0, 0.0, h], rtol=1e-6)
            branches[c.branch] += 1
            worst_obl = max(worst_obl, c.residual)
    return worst_perp, worst_obl, branches


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for k, v in vars(Config()).items():
        ap.add_argument(f"--{k}", type=type(v), default=v)
    cfg = Config(**vars(ap.parse_args()))
    wp, wo, br = run(cfg)
    print(f"perpendicular apex: max residual {wp:.3e}")
    print(f"oblique apex:       max residual {wo:.3e}")
    print("branches:", dict(br))


if __name__ == "__main__":
    main()
