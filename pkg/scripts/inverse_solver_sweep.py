"""Round-trip random angle vectors through the dihedral-cosine inverse solver."""

import argparse
import time
from collections import Counter
from dataclasses import dataclass

import numpy as np

from tconvex import sampling
from tconvex.errors import Infeasible, NoConvergence
from tconvex.orthoscheme import cyclic_distance, dihedral_cos_squared, solve_angles_from_dihedral


@dataclass
class SolverSweepConfig:
    trials: int = 500
    n_min: int = 3
    n_max: int = 10
    seed: int = 0


def main():
    p = argparse.ArgumentParser(description=__doc__)
    for name, default in vars(SolverSweepConfig()).items():
        p.add_argument(f"--{name.replace('_', '-')}", dest=name, type=type(default), default=default)
    cfg = SolverSweepConfig(**vars(p.parse_args()))
    rng = np.random.default_rng(cfg.seed)
    outcomes, worst_res, worst_dist = Counter(), 0.0, 0.0
    start = time.perf_counter()
    for _ in range(cfg.trials):
        phis = sampling.random_phis(rng, int(rng.integers(cfg.n_min, cfg.n_max + 1)))
        A = dihedral_cos_squared(phis)
        try:
            got = solve_angles_from_dihedral(A)
        except (Infeasible, NoConvergence) as exc:
            outcomes[type(exc).__name__] += 1
            continue
        outcomes["ok"] += 1
        worst_res = max(worst_res, float(np.max(np.abs(dihedral_cos_squared(got) - A))))
        worst_dist = max(worst_dist, cyclic_distance(got, phis))
    elapsed = time.perf_counter() - start
    print(f"trials={cfg.trials} outcomes={dict(outcomes)}")
    print(f"max cosine residual {worst_res:.2e}, max angle distance {worst_dist:.2e}")
    print(f"{1e3 * elapsed / cfg.trials:.2f} ms per solve")


if __name__ == "__main__":
    main()
