"""The coarea quadratic form on support vectors.

For fixed angles the coarea is a quadratic form in the support vector ``h``;
its Gram matrix in the basis of normals is tridiagonal with cyclic corners.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NonpositiveCoarea, NotTConvex
from .polygon import check_angles, cone_tolerance


@dataclass(frozen=True)
class GramMatrix:
    phis: tuple[float, ...]
    entries: np.ndarray

    @property
    def n(self) -> int:
        return len(self.phis)

    def __array__(self, dtype=None, copy=None):
        return self.entries if dtype is None else self.entries.astype(dtype)

    def form(self, h, k=None) -> float:
        h = self._vec(h)
        k = h if k is None else self._vec(k)
        return float(h @ self.entries @ k)

    def edge_lengths(self, h) -> np.ndarray:
        """``l_i(h) = 2 coarea(eta_i, h)``."""
        return 2.0 * self.entries @ self._vec(h)

    def _vec(self, v) -> np.ndarray:
        v = np.asarray(v, dtype=float)
        if v.shape != (self.n,):
            raise DimensionMismatch(f"expected a vector of length {self.n}, got shape {v.shape}")
        return v


def gram(phis) -> GramMatrix:
    """Gram matrix of the mixed coarea for ``n >= 2`` angles.

    For ``n == 2`` both cyclic neighbours of a row are the same index and their
    contributions add up.
    """
    phis = check_angles(phis, min_count=2)
    n = len(phis)
    inv_sinh = 1.0 / np.sinh(phis)
    coth = 1.0 / np.tanh(phis)
    g = np.zeros((n, n))
    for k in range(n):
        g[k, k] = 0.5 * (coth[k - 1] + coth[k])
        nxt = (k + 1) % n
        g[k, nxt] -= 0.5 * inv_sinh[k]
        g[nxt, k] -= 0.5 * inv_sinh[k]
    return GramMatrix(tuple(phis.tolist()), g)


def mixed_coarea(G: GramMatrix, h, k) -> float:
    return G.form(h, k)


@dataclass(frozen=True)
class DefinitenessReport:
    margin: float
    row_margins: tuple[float, ...]
    factorization_ok: bool
    min_pivot: float

    @property
    def positive_definite(self) -> bool:
        return self.margin > 0 and self.factorization_ok


def is_positive_definite(G: GramMatrix) -> DefinitenessReport:
    g = G.entries
    off = np.abs(g).sum(axis=1) - np.abs(np.diag(g))
    margins = np.diag(g) - off
    try:
        L = np.linalg.cholesky(g)
    except np.linalg.LinAlgError:
        ok, pivot = False, -math.inf
    else:
        pivots = np.diag(L) ** 2
        ok, pivot = bool(np.all(pivots > 0)), float(pivots.min())
    return DefinitenessReport(float(margins.min()), tuple(margins.tolist()), ok, pivot)


@dataclass(frozen=True)
class MinkowskiReport:
    lhs: float
    rhs: float
    equality: bool

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs


def _require_cone(G: GramMatrix, h, name: str):
    lengths = G.edge_lengths(h)
    if not np.all(lengths > cone_tolerance(h)):
        raise NotTConvex(f"{name} is outside the cone of support vectors")


def reversed_minkowski(G: GramMatrix, hP, hQ) -> MinkowskiReport:
    """``coarea(P, Q)^2 <= coarea(P) coarea(Q)``, equal exactly for homothetic P, Q."""
    _require_cone(G, hP, "hP")
    _require_cone(G, hQ, "hQ")
    mixed = G.form(hP, hQ)
    lhs = mixed * mixed
    rhs = G.form(hP) * G.form(hQ)
    return MinkowskiReport(lhs, rhs, 1.0 - lhs / rhs <= 1e-9)


def normalize_unit_coarea(G: GramMatrix, h) -> np.ndarray:
    h = G._vec(h)
    c = G.form(h)
    if not c > 0:
        raise NonpositiveCoarea(f"coarea {c} is not positive")
    return h / math.sqrt(c)
