"""Brute-force search for circular sections, compared with the closed form.

Sweeps plane normals over a hemisphere grid, ranks them by how round the
central section is, and prints how far the best ones lie from the nearest
predicted family normal.  The gap should be on the order of the grid step.
"""

import argparse
from dataclasses import dataclass

import numpy as np

from quadrilab.core import Plane3, Quadric
from quadrilab.sections import circular_section_planes, plane_section


@dataclass
class Config:
    a: float = 3.0
    b: float = 2.0
    c: float = 1.0
    grid: int = 200
    top: int = 6


def eig_ratio(sec) -> float:
    lam = np.abs(np.linalg.eigvalsh(sec.quadratic_part()))
    return float(lam.min() / lam.max())


def run(cfg: Config):
    q = Quadric.axis_ellipsoid(cfg.a, cfg.b, cfg.c)
    predicted = circular_section_planes(q).normals
    scored = []
    for th in np.linspace(0.0, np.pi / 2, cfg.grid):
        for ph in np.linspace(0.0, 2 * np.pi, 2 * cfg.grid, endpoint=False):
            n = np.array([np.sin(th) * np.cos(ph), np.sin(th) * np.sin(ph), np.cos(th)])
            scored.append((1.0 - eig_ratio(plane_section(q, Plane3(n, 0.0))), n))
    scored.sort(key=lambda t: t[0])
    best = scored[:cfg.top]
    gaps = [min(min(np.linalg.norm(n - p), np.linalg.norm(n + p)) for p in predicted)
            for _, n in best]
    return predicted, best, gaps


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for k, v in vars(Config()).items():
        ap.add_argument(f"--{k}", type=type(v), default=v)
    cfg = Config(**vars(ap.parse_args()))
    predicted, best, gaps = run(cfg)
    for n in predicted:
        print("predicted normal", np.round(n, 6))
    print(f"grid step {np.pi / 2 / (cfg.grid - 1):.3e}")
    for (dev, n), g in zip(best, gaps):
        print(f"  1 - ratio {dev:.3e}  normal {np.round(n, 4)}  gap {g:.3e}")


if __name__ == "__main__":
    main()
