"""Sweep S-type cone angles over a grid of merged triples and write a CSV.

Compares the six-chart sum of dihedral angles with the closed form.
"""

import argparse
import csv
import itertools
import math
import sys
from dataclasses import dataclass

import numpy as np

from tconvex.cone_manifold import s_cone_angle


@dataclass
class SweepConfig:
    lo: float = 0.05
    hi: float = 2.0
    steps: int = 8
    out: str = "-"


def sweep(cfg: SweepConfig):
    grid = np.linspace(cfg.lo, cfg.hi, cfg.steps)
    for a, b, c in itertools.combinations_with_replacement(grid, 3):
        rep = s_cone_angle(a, b, c)
        yield a, b, c, rep.theta_sum, rep.theta_closed, rep.discrepancy


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(SweepConfig()).items():
        p.add_argument(f"--{name}", type=type(default), default=default)
    cfg = SweepConfig(**vars(p.parse_args()))
    stream = sys.stdout if cfg.out == "-" else open(cfg.out, "w", newline="")
    w = csv.writer(stream)
    w.writerow(("a", "b", "c", "theta_sum", "theta_closed", "discrepancy"))
    worst, lo, hi = 0.0, math.inf, -math.inf
    for row in sweep(cfg):
        w.writerow(row)
        worst = max(worst, row[-1])
        lo, hi = min(lo, row[3]), max(hi, row[3])
    print(f"theta in [{lo / math.pi:.4f}, {hi / math.pi:.4f}] pi, max discrepancy {worst:.2e}",
          file=sys.stderr)


if __name__ == "__main__":
    main()
