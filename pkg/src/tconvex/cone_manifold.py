"""Cone angles of the spherical cone-manifold glued from all angle orderings.

The orthoschemes of every ordering of the angles (up to cyclic rotation) are
glued along common facets. A codimension-2 face where two disjoint pairs of
angles merge is non-singular; one where three consecutive angles merge carries
a cone angle in ``(2 pi, 3 pi)``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .coarea import gram
from .errors import BadAngle, TooFewFacets
from .orthoscheme import dihedral_cosines
from .polygon import PHI_MIN, check_angles

S_FACE = "S"
N_FACE = "N"
AMBIENT = (1.0, 1.0)


@dataclass(frozen=True)
class ChartSet:
    phis: tuple[float, ...]
    orders: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.phis)

    def angles(self, order) -> tuple[float, ...]:
        return tuple(self.phis[i] for i in order)

    def __len__(self) -> int:
        return len(self.orders)

    def __contains__(self, order) -> bool:
        return canonical_rotation(order) in self.orders


def canonical_rotation(order) -> tuple[int, ...]:
    """Lexicographically smallest rotation of an index sequence."""
    order = tuple(order)
    return min(order[s:] + order[:s] for s in range(len(order)))


def enumerate_charts(phis) -> ChartSet:
    """One index ordering per cyclic class, so ``(n-1)!`` charts.

    Charts are orderings of labelled slots; repeated angle values stay distinct.
    """
    phis = check_angles(phis)
    n = len(phis)
    if n < 3:
        raise TooFewFacets(f"need n >= 3 angles, got {n}")
    orders = tuple((0,) + rest for rest in itertools.permutations(range(1, n)))
    return ChartSet(tuple(phis.tolist()), orders)


N_FACE_TOTAL_ANGLE = 4 * (math.pi / 2)


def n_face_total_angle(phis, k: int, j: int) -> float:
    """Total angle around the face merging ``(phi[k], phi[k+1])`` and ``(phi[j], phi[j+1])``.

    Sums the dihedral angle between the two collapsing facets over the four
    charts obtained by ordering each pair both ways.
    """
    charts = enumerate_charts(phis)
    n = charts.n
    if n < 4:
        raise TooFewFacets("an N-type face needs two disjoint merges, so n >= 4")
    pairs = [(k % n, (k + 1) % n), (j % n, (j + 1) % n)]
    if set(pairs[0]) & set(pairs[1]):
        raise ValueError(f"merged pairs {pairs} overlap")
    total = 0.0
    for swap_first, swap_second in itertools.product((False, True), repeat=2):
        order = list(range(n))
        for (p, q), swap in zip(pairs, (swap_first, swap_second)):
            if swap:
                order[p], order[q] = order[q], order[p]
        assert tuple(order) in charts
        G = gram(charts.angles(order)).entries
        # the facet between slots p and p+1 is the normal with index p+1
        a, b = pairs[0][1], pairs[1][1]
        cos = -G[a, b] / math.sqrt(G[a, a] * G[b, b])
        total += math.acos(cos)
    return total


@dataclass(frozen=True)
class ConeAngleReport:
    merged_triple: tuple[float, float, float]
    theta_sum: float
    theta_closed: float
    dihedral_angles: tuple[float, ...]
    face_type: str = S_FACE

    @property
    def discrepancy(self) -> float:
        return abs(self.theta_sum - self.theta_closed)


def cos_half_cone_angle(a: float, b: float, c: float) -> float:
    sa, sb, sc = math.sinh(a), math.sinh(b), math.sinh(c)
    num = sa * sb * sc - math.sinh(a + b + c) * (sa * sb + sb * sc + sc * sa)
    den = math.sinh(a + b) * math.sinh(b + c) * math.sinh(c + a)
    return num / den


def cos_half_cone_angle_equal(phi: float) -> float:
    ch, sh = math.cosh(phi), math.sinh(phi)
    return -(2 * ch * ch + sh * sh) / (2 * ch ** 3)


def s_cone_angle(a: float, b: float, c: float, ambient=AMBIENT) -> ConeAngleReport:
    """Cone angle around the face where three consecutive angles merge.

    ``theta_sum`` adds the dihedral angle at that face over the six orthoschemes
    ordering ``(a, b, c)``, each read from a full five-angle chart
    ``(ambient[0], x, y, z, ambient[1])``. ``theta_closed`` uses the three-variable
    closed form; the half angle lies in ``(pi, 3 pi / 2)``.
    """
    triple = (float(a), float(b), float(c))
    if not all(math.isfinite(x) and x >= PHI_MIN for x in triple):
        raise BadAngle(f"angles must be finite and >= {PHI_MIN}: {triple}")
    angles = []
    for x, y, z in itertools.permutations(triple):
        ortho = dihedral_cosines([ambient[0], x, y, z, ambient[1]])
        # facets 2 and 3 bound the slots of x|y and y|z
        angles.append(float(ortho.dihedral_angles[2]))
    theta_sum = math.fsum(angles)
    half = cos_half_cone_angle(*triple)
    theta_closed = 4 * math.pi - 2 * math.acos(max(-1.0, min(1.0, half)))
    return ConeAngleReport(triple, theta_sum, theta_closed, tuple(angles))


def sinh_identity_residual(a: float, b: float, c: float) -> float:
    """Normalised residual of ``sinh(a+b) sinh(b+c) - sinh a sinh c = sinh b sinh(a+b+c)``."""
    lhs = math.sinh(a + b) * math.sinh(b + c) - math.sinh(a) * math.sinh(c)
    rhs = math.sinh(b) * math.sinh(a + b + c)
    return abs(lhs - rhs) / max(1.0, abs(rhs))


def involution(phis) -> list[float]:
    """Reverse the order of the angles (an isometry of the cone-manifold)."""
    return list(reversed(check_angles(phis).tolist()))


def cyclic_permutation_matrix(n: int, shift: int) -> np.ndarray:
    return np.roll(np.eye(n), shift, axis=0)
