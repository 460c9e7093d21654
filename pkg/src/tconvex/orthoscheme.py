"""Spherical orthoscheme cut out of the support cone by the unit coarea sphere.

Facets of the cone are ``l_k = 0``; facet ``k`` meets facet ``k+1`` at an acute
dihedral angle whose cosine depends on ``(phi[k-1], phi[k], phi[k+1])`` and is
orthogonal to every other facet. Indices are 0-based and cyclic.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .coarea import gram
from .errors import BadInput, Infeasible, NoConvergence, TooFewFacets, TransversalMiss
from .polygon import check_angles

SEEDS = (0.25, 0.5, 1.0, 2.0)
MAX_ITER = 200
FD_STEP = 1e-6
CLOSURE_TOL = 1e-13


@dataclass(frozen=True)
class OrthoschemeAngles:
    phis: tuple[float, ...]
    dihedral_cos: np.ndarray
    gram_cos: np.ndarray

    @property
    def n(self) -> int:
        return len(self.phis)

    @property
    def dihedral_angles(self) -> np.ndarray:
        return np.arccos(self.dihedral_cos)

    @property
    def right_angle_pairs(self) -> list[tuple[int, int]]:
        """Facet pairs that meet orthogonally (all non-adjacent ones)."""
        n = self.n
        return [(i, j) for i, j in itertools.combinations(range(n), 2)
                if (j - i) % n not in (1, n - 1)]

    @property
    def discrepancy(self) -> float:
        return float(np.max(np.abs(self.dihedral_cos - self.gram_cos)))


def dihedral_cos_squared(phis) -> np.ndarray:
    """``sinh a sinh c / (sinh(a+b) sinh(b+c))`` for each cyclic triple ``(a, b, c)``."""
    b = np.asarray(phis, dtype=float)
    a, c = np.roll(b, 1), np.roll(b, -1)
    return np.sinh(a) * np.sinh(c) / (np.sinh(a + b) * np.sinh(b + c))


def gram_dihedral_cos(phis) -> np.ndarray:
    """Cosines ``-G[k,k+1] / sqrt(G[k,k] G[k+1,k+1])`` read off the Gram matrix."""
    g = gram(phis).entries
    d = np.diag(g)
    idx = np.arange(len(d))
    nxt = (idx + 1) % len(d)
    return -g[idx, nxt] / np.sqrt(d * d[nxt])


def dihedral_cosines(phis) -> OrthoschemeAngles:
    phis = check_angles(phis)
    if len(phis) < 3:
        raise TooFewFacets(f"an orthoscheme needs n >= 3 angles, got {len(phis)}")
    return OrthoschemeAngles(
        tuple(phis.tolist()),
        np.sqrt(dihedral_cos_squared(phis)),
        gram_dihedral_cos(phis),
    )


def arc_length_n2(phi1: float, phi2: float) -> float:
    """Length of the arc cut from the unit coarea circle by the n = 2 support cone.

    The arc ends at the rays where one edge length vanishes, i.e. at
    ``G^{-1} e_1`` and ``G^{-1} e_2``.
    """
    G = gram([phi1, phi2]).entries
    ends = np.linalg.solve(G, np.eye(2))
    v, w = ends[:, 0], ends[:, 1]
    cos = (v @ G @ w) / math.sqrt((v @ G @ v) * (w @ G @ w))
    return math.acos(min(1.0, cos))


@dataclass(frozen=True)
class CrossRatioWitness:
    k: int
    lam: float
    u: tuple[float, float, float, float]
    cos_squared: float

    @property
    def identity_residual(self) -> float:
        return abs((self.lam - 1.0) / self.lam - self.cos_squared)


def _unwrapped_psi(phis: np.ndarray, j: int) -> float:
    n = len(phis)
    q, r = divmod(j, n)
    return float(np.sum(phis[:r])) + q * float(np.sum(phis))


def cross_ratio(phis, k: int, transversal=(0.0, 1.0, 1.0)) -> CrossRatioWitness:
    """Cross ratio of the lines spanned by ``eta[k-1], ..., eta[k+2]``.

    Labels are rotated so that ``eta[k] = (0, 1)``; the cross ratio only depends
    on the angles, and this keeps the four lines away from the light cone.
    ``transversal = (a, b, c)`` is the line ``a x1 + b x2 = c`` (``c != 0``),
    coordinatised by arc length along its direction.
    """
    phis = check_angles(phis)
    n = len(phis)
    if n < 3:
        raise TooFewFacets(f"need n >= 3 angles, got {n}")
    a, b, c = map(float, transversal)
    if c == 0.0 or a == b == 0.0:
        raise TransversalMiss("transversal must be a line not through the origin")
    dx, dy = b / math.hypot(a, b), -a / math.hypot(a, b)
    u = []
    base = _unwrapped_psi(phis, k)
    for j in range(k - 1, k + 3):
        psi = _unwrapped_psi(phis, j) - base
        e1, e2 = math.sinh(psi), math.cosh(psi)
        denom = a * e1 + b * e2
        if abs(denom) < 1e-12 * math.hypot(a, b) * math.hypot(e1, e2):
            raise TransversalMiss(f"line {j} is parallel to the transversal")
        s = c / denom
        u.append(s * (e1 * dx + e2 * dy))
    u0, u1, u2, u3 = u
    lam = (u2 - u0) / (u2 - u1) * (u3 - u1) / (u3 - u0)
    cos2 = float(dihedral_cos_squared(phis)[k % n])
    return CrossRatioWitness(k % n, lam, tuple(u), cos2)


def chain_step(a: float, b: float, A: float) -> float:
    """Solve ``A sinh(a+b) sinh(b+c) = sinh a sinh c`` for ``c > 0``.

    The relation is linear in ``(sinh c, cosh c)``, which gives ``tanh c``.
    """
    try:
        sab = math.sinh(a + b)
        den = math.sinh(a) - A * sab * math.cosh(b)
        x = A * sab * math.sinh(b) / den if den > 0 else math.nan
    except OverflowError:
        x = math.nan
    if not 0.0 < x < 1.0:
        raise Infeasible(f"no positive angle after ({a}, {b}) for A={A}")
    return math.atanh(x)


def chain_residual(a: float, b: float, c: float, A: float) -> float:
    return A * math.sinh(a + b) * math.sinh(b + c) - math.sinh(a) * math.sinh(c)


def chain(A, phi0: float, phi1: float) -> np.ndarray:
    """Angles determined by the two seeds and ``A[1], ..., A[n-2]``."""
    A = np.asarray(A, dtype=float)
    p = [phi0, phi1]
    for k in range(1, len(A) - 1):
        p.append(chain_step(p[k - 1], p[k], A[k]))
    return np.array(p)


def _closure(A: np.ndarray, z: np.ndarray):
    """Wrap-around residuals for log-seeds ``z``; None when the chain breaks."""
    with np.errstate(over="ignore", invalid="ignore"):
        try:
            p = chain(A, *np.exp(z))
        except (Infeasible, OverflowError):
            return None, None
        c2 = dihedral_cos_squared(p)
    r = np.array([c2[-1] - A[-1], c2[0] - A[0]])
    if not np.all(np.isfinite(r)):
        return None, None
    return r, p


def _jacobian(A, z, r):
    J = np.empty((2, 2))
    for j in range(2):
        dz = np.zeros(2)
        dz[j] = FD_STEP
        rp, _ = _closure(A, z + dz)
        if rp is not None:
            J[:, j] = (rp - r) / FD_STEP
            continue
        rm, _ = _closure(A, z - dz)
        if rm is None:
            return None
        J[:, j] = (r - rm) / FD_STEP
    return J


def _newton(A: np.ndarray, seed: tuple[float, float]):
    z = np.log(np.asarray(seed, dtype=float))
    r, p = _closure(A, z)
    if r is None:
        return None
    for _ in range(MAX_ITER):
        if np.max(np.abs(r)) <= CLOSURE_TOL:
            return p
        J = _jacobian(A, z, r)
        if J is None:
            return None
        try:
            step = np.linalg.solve(J, -r)
        except np.linalg.LinAlgError:
            return None
        norm = np.linalg.norm(r)
        damping = 1.0
        while damping > 1e-8:
            r_new, p_new = _closure(A, z + damping * step)
            if r_new is not None and np.linalg.norm(r_new) < norm:
                break
            damping *= 0.5
        else:
            break
        z = z + damping * step
        r, p = r_new, p_new
    return p if np.max(np.abs(r)) <= 1e-12 else None


def _full_newton(A: np.ndarray, start: float):
    """Damped Newton on all ``n`` log-angles at once, from constant angles."""
    def resid(z):
        with np.errstate(over="ignore", invalid="ignore"):
            return dihedral_cos_squared(np.exp(z)) - A

    n = len(A)
    z = np.full(n, math.log(start))
    r = resid(z)
    for _ in range(MAX_ITER):
        if np.max(np.abs(r)) <= CLOSURE_TOL:
            return np.exp(z)
        J = np.empty((n, n))
        for j in range(n):
            dz = np.zeros(n)
            dz[j] = FD_STEP
            J[:, j] = (resid(z + dz) - r) / FD_STEP
        if not np.all(np.isfinite(J)):
            return None
        step = np.linalg.lstsq(J, -r, rcond=None)[0]
        norm = np.linalg.norm(r)
        damping = 1.0
        while damping > 1e-10:
            r_new = resid(z + damping * step)
            if np.all(np.isfinite(r_new)) and np.linalg.norm(r_new) < norm:
                break
            damping *= 0.5
        else:
            break
        z = z + damping * step
        r = r_new
    return np.exp(z) if np.max(np.abs(r)) <= 1e-12 else None


def closure_starts(n: int):
    """Deterministic start order: chain origin first, then the seed grid."""
    for shift in range(n):
        for seed in itertools.product(SEEDS, repeat=2):
            yield shift, seed


def solve_angles_from_dihedral(A) -> np.ndarray:
    """Angles whose orthoscheme has squared dihedral cosines ``A``.

    ``A[k]`` is the squared cosine between facets ``k`` and ``k+1``. Two seed
    angles are propagated along the chain of cosines; a damped Newton iteration
    on the (log) seeds then enforces the two wrap-around cosines. Long chains
    amplify seed errors, so if every chain start fails the full system is
    solved by Newton on all angles.
    """
    A = np.asarray(A, dtype=float)
    if A.ndim != 1 or len(A) < 3:
        raise TooFewFacets(f"need at least 3 squared cosines, got {A.tolist()}")
    if not np.all((A > 0) & (A < 1)):
        raise BadInput(f"squared cosines must lie in (0, 1): {A.tolist()}")
    feasible = False
    for shift, seed in closure_starts(len(A)):
        rolled = np.roll(A, -shift)
        if _closure(rolled, np.log(seed))[0] is None:
            continue
        feasible = True
        p = _newton(rolled, seed)
        if p is not None:
            return np.roll(p, shift)
    for start in SEEDS:
        p = _full_newton(A, start)
        if p is not None and np.all(p > 0):
            return p
    if not feasible:
        raise Infeasible(f"every seed yields a non-positive angle for A={A.tolist()}")
    raise NoConvergence(f"closure failed from every start for A={A.tolist()}")


def cyclic_distance(x, y) -> float:
    """Max-abs distance between two cyclic sequences, up to rotation and reversal."""
    x, y = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
    if x.shape != y.shape:
        return math.inf
    best = math.inf
    for cand in (y, y[::-1]):
        for s in range(len(y)):
            best = min(best, float(np.max(np.abs(x - np.roll(cand, s)))))
    return best
