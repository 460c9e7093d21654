"""Random angle vectors and interior support vectors for property sweeps."""

from __future__ import annotations

import numpy as np

from .polygon import PolygonSpec, is_t_convex

PHI_RANGE = (0.05, 1.5)


def random_phis(rng: np.random.Generator, n: int, lo: float = PHI_RANGE[0],
                hi: float = PHI_RANGE[1]) -> np.ndarray:
    return rng.uniform(lo, hi, size=n)


def random_interior_h(rng: np.random.Generator, phis, max_tries: int = 60) -> np.ndarray:
    """Equal support numbers plus a perturbation, rejected until every edge is positive.

    Equal support numbers are always interior to the cone, so shrinking the
    perturbation terminates.
    """
    n = len(phis)
    scale = rng.uniform(0.5, 2.0)
    eps = 10 ** rng.uniform(-4, np.log10(0.5))
    for _ in range(max_tries):
        h = scale * (1.0 + eps * rng.uniform(-1.0, 1.0, size=n))
        if is_t_convex(PolygonSpec(tuple(phis), tuple(h))):
            return h
        eps *= 0.5
    return np.full(n, scale)


def random_spec(rng: np.random.Generator, n_range=(1, 10)) -> PolygonSpec:
    n = int(rng.integers(n_range[0], n_range[1] + 1))
    phis = random_phis(rng, n)
    return PolygonSpec(tuple(phis), tuple(random_interior_h(rng, phis)))
