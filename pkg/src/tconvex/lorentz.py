"""Linear algebra of the Lorentz plane R^{1,1}.

Vectors are written ``(x1, x2)`` with ``x1`` the space coordinate and ``x2``
the time coordinate, and the inner product is ``x1*y1 - x2*y2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import NotFutureTimelike, ParallelLines, ZeroVector

TAU_LIGHT = 1e-12
TAU_SING = 1e-12
ACOSH_CLAMP = 1e-12

SPACELIKE = "spacelike"
TIMELIKE = "timelike"
LIGHTLIKE = "lightlike"


@dataclass(frozen=True)
class LVec:
    x1: float
    x2: float

    def __post_init__(self):
        if not (math.isfinite(self.x1) and math.isfinite(self.x2)):
            raise ValueError(f"non-finite Lorentz vector ({self.x1}, {self.x2})")
        object.__setattr__(self, "x1", float(self.x1))
        object.__setattr__(self, "x2", float(self.x2))

    def __iter__(self) -> Iterator[float]:
        yield self.x1
        yield self.x2

    def __add__(self, other: "LVec") -> "LVec":
        return LVec(self.x1 + other.x1, self.x2 + other.x2)

    def __sub__(self, other: "LVec") -> "LVec":
        return LVec(self.x1 - other.x1, self.x2 - other.x2)

    def __mul__(self, s: float) -> "LVec":
        return LVec(s * self.x1, s * self.x2)

    __rmul__ = __mul__

    def as_array(self) -> np.ndarray:
        return np.array([self.x1, self.x2])


@dataclass(frozen=True)
class CausalClass:
    kind: str
    future: bool

    @property
    def future_timelike(self) -> bool:
        return self.kind == TIMELIKE and self.future


@dataclass(frozen=True)
class SupportLine:
    """The line ``{x : <x, normal> = offset}`` with a unit future timelike normal.

    For the support line of ``h * eta`` (``eta`` unit) the offset is ``-h``.
    """

    normal: LVec
    offset: float


def lprod(a: LVec, b: LVec) -> float:
    return a.x1 * b.x1 - a.x2 * b.x2


def classify(v: LVec) -> CausalClass:
    scale = max(abs(v.x1), abs(v.x2))
    if scale <= TAU_LIGHT:
        raise ZeroVector(f"cannot classify the zero vector ({v.x1}, {v.x2})")
    y1, y2 = v.x1 / scale, v.x2 / scale
    q = y1 * y1 - y2 * y2
    if q > TAU_LIGHT:
        kind = SPACELIKE
    elif q < -TAU_LIGHT:
        kind = TIMELIKE
    else:
        kind = LIGHTLIKE
    return CausalClass(kind, v.x2 > 0)


def hyp_matrix(t: float) -> np.ndarray:
    """Matrix of the hyperbolic translation ``H_t``."""
    c, s = math.cosh(t), math.sinh(t)
    return np.array([[c, s], [s, c]])


def hyp_translate(t: float, v: LVec) -> LVec:
    c, s = math.cosh(t), math.sinh(t)
    return LVec(c * v.x1 + s * v.x2, s * v.x1 + c * v.x2)


def unit_timelike(psi: float) -> LVec:
    """The point of the unit hyperbola at signed hyperbolic angle ``psi`` from (0, 1)."""
    return LVec(math.sinh(psi), math.cosh(psi))


def _require_future_timelike(v: LVec, name: str) -> float:
    """Return ``-<v, v>`` after checking that ``v`` is future timelike."""
    if not classify(v).future_timelike:
        raise NotFutureTimelike(f"{name}=({v.x1}, {v.x2}) is not future timelike")
    return -lprod(v, v)


def langle(x: LVec, y: LVec) -> float:
    """Lorentzian angle between two future timelike vectors.

    Computed as the difference of rapidities in null coordinates
    ``u = x2 + x1``, ``v = x2 - x1``; ``cosh`` of the result equals
    ``-<x, y> / sqrt(<x, x> <y, y>)`` (see :func:`langle_acosh`) but stays
    accurate for nearly proportional vectors.
    """
    _require_future_timelike(x, "x")
    _require_future_timelike(y, "y")
    ratio = ((y.x2 + y.x1) * (x.x2 - x.x1)) / ((x.x2 + x.x1) * (y.x2 - y.x1))
    return abs(0.5 * math.log(ratio))


def langle_acosh(x: LVec, y: LVec) -> float:
    nx = _require_future_timelike(x, "x")
    ny = _require_future_timelike(y, "y")
    ratio = -lprod(x, y) / math.sqrt(nx * ny)
    if 1.0 - ACOSH_CLAMP <= ratio < 1.0:
        ratio = 1.0
    return math.acosh(ratio)


def support_line(a: LVec) -> SupportLine:
    """The line through ``a`` orthogonal to ``a``."""
    h = math.sqrt(_require_future_timelike(a, "a"))
    return SupportLine(LVec(a.x1 / h, a.x2 / h), -h)


def line_intersect(l1: SupportLine, l2: SupportLine) -> LVec:
    # rows of the 2x2 system <x, n> = offset, i.e. n1*x1 - n2*x2 = offset
    a11, a12 = l1.normal.x1, -l1.normal.x2
    a21, a22 = l2.normal.x1, -l2.normal.x2
    det = a11 * a22 - a12 * a21
    norm = math.hypot(a11, a12) * math.hypot(a21, a22)
    if norm == 0.0 or abs(det) / norm <= TAU_SING:
        raise ParallelLines("support lines have proportional normals")
    b1, b2 = l1.offset, l2.offset
    return LVec((b1 * a22 - a12 * b2) / det, (a11 * b2 - b1 * a21) / det)


def support_vertex(psi1: float, h1: float, psi2: float, h2: float) -> LVec:
    """Intersection of the support lines of ``h1 eta(psi1)`` and ``h2 eta(psi2)``.

    The system is solved in the Lorentz frame centred between the two normals
    and mapped back, which keeps it well conditioned at large hyperbolic angles.
    """
    mid, half = 0.5 * (psi1 + psi2), 0.5 * (psi2 - psi1)
    x = line_intersect(SupportLine(unit_timelike(-half), -h1),
                       SupportLine(unit_timelike(half), -h2))
    return hyp_translate(mid, x)


def ldist(p: LVec, q: LVec) -> float:
    """Lorentzian length of the spacelike segment from ``p`` to ``q``."""
    d = q - p
    return math.sqrt(max(lprod(d, d), 0.0))
