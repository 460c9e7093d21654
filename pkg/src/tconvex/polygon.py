"""t-convex polygons built from angles and support numbers.

A polygon is given by angles ``phis`` between consecutive inward unit normals
and support numbers ``hs``. The first normal is fixed to ``(0, 1)`` and
``eta[i+1] = H_{phis[i]} eta[i]``; the boundary is invariant under ``H_t``
with ``t = sum(phis)``. All indices are 0-based and cyclic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import BadAngle, NotTConvex
from .lorentz import LVec, hyp_translate, lprod, support_vertex, unit_timelike

PHI_MIN = 1e-8


def cone_tolerance(hs) -> float:
    return 1e-12 * max(1.0, float(np.max(np.abs(hs))))


def check_angles(phis, min_count: int = 1) -> np.ndarray:
    phis = np.asarray(phis, dtype=float)
    if phis.ndim != 1 or len(phis) < min_count:
        raise BadAngle(f"need at least {min_count} angle(s), got {phis.tolist()}")
    if not np.all(np.isfinite(phis)) or np.any(phis < PHI_MIN):
        raise BadAngle(f"angles must be finite and >= {PHI_MIN}: {phis.tolist()}")
    return phis


@dataclass(frozen=True)
class PolygonSpec:
    phis: tuple[float, ...]
    hs: tuple[float, ...]

    def __post_init__(self):
        phis = check_angles(self.phis)
        hs = np.asarray(self.hs, dtype=float)
        if hs.shape != phis.shape:
            raise BadAngle(f"{len(phis)} angles but {hs.size} support numbers")
        if not np.all(np.isfinite(hs)):
            raise ValueError("support numbers must be finite")
        object.__setattr__(self, "phis", tuple(phis.tolist()))
        object.__setattr__(self, "hs", tuple(hs.tolist()))

    @property
    def n(self) -> int:
        return len(self.phis)

    @property
    def t(self) -> float:
        return math.fsum(self.phis)

    @property
    def formal(self) -> bool:
        """True when some support number is not positive."""
        return any(h <= 0 for h in self.hs)

    def scaled(self, lam: float) -> "PolygonSpec":
        return PolygonSpec(self.phis, tuple(lam * h for h in self.hs))


def normal_angles(spec: PolygonSpec) -> np.ndarray:
    """Hyperbolic angles ``psi[i]`` of the normals, ``psi[0] = 0``."""
    return np.concatenate([[0.0], np.cumsum(spec.phis[:-1])])


def normals(spec: PolygonSpec) -> list[LVec]:
    return [unit_timelike(psi) for psi in normal_angles(spec)]


def half_lengths(spec: PolygonSpec) -> tuple[np.ndarray, np.ndarray]:
    """Signed distances from each foot ``h_i eta_i`` to the next and previous vertex.

    ``fwd[i] = (h_i cosh phi_i - h_{i+1}) / sinh phi_i`` and
    ``bwd[i] = (h_i cosh phi_{i-1} - h_{i-1}) / sinh phi_{i-1}``.
    """
    phis = np.asarray(spec.phis)
    hs = np.asarray(spec.hs)
    h_next = np.roll(hs, -1)
    h_prev = np.roll(hs, 1)
    phi_prev = np.roll(phis, 1)
    fwd = (hs * np.cosh(phis) - h_next) / np.sinh(phis)
    bwd = (hs * np.cosh(phi_prev) - h_prev) / np.sinh(phi_prev)
    return fwd, bwd


def edge_lengths(spec: PolygonSpec) -> np.ndarray:
    fwd, bwd = half_lengths(spec)
    return fwd + bwd


@dataclass(frozen=True)
class ConeReport:
    ok: bool
    lengths: tuple[float, ...]
    offending: tuple[int, ...]
    tolerance: float

    def __bool__(self) -> bool:
        return self.ok


def is_t_convex(spec: PolygonSpec) -> ConeReport:
    lengths = edge_lengths(spec)
    eps = cone_tolerance(spec.hs)
    bad = tuple(int(i) for i in np.flatnonzero(~(lengths > eps)))
    return ConeReport(not bad, tuple(lengths.tolist()), bad, eps)


def period_vertices(spec: PolygonSpec, k: int = 0, offset: float = 0.0) -> list[LVec]:
    """Vertices ``p_{i,i+1}`` of the k-th period, intersected directly from its support lines.

    ``offset`` rotates the whole polygon by ``H_offset`` first.
    """
    psi = np.append(normal_angles(spec), spec.t) + k * spec.t + offset
    hs = spec.hs + spec.hs[:1]
    return [support_vertex(psi[i], hs[i], psi[i + 1], hs[i + 1]) for i in range(spec.n)]


def vertices(spec: PolygonSpec) -> list[LVec]:
    return period_vertices(spec, 0)


def period_window(periods: int) -> range:
    """Period indices of a window of ``periods`` periods centred on period 0."""
    start = -((periods - 1) // 2) if periods > 0 else 0
    return range(start, start + periods)


def boundary(spec: PolygonSpec, periods: int) -> list[LVec]:
    """Polyline of the boundary over ``periods`` fundamental periods.

    Returns ``n * periods + 1`` points (none when ``periods == 0``).
    """
    if periods < 0:
        raise ValueError("periods must be non-negative")
    window = period_window(periods)
    if not window:
        return []
    pts = [period_vertices(spec, window[0] - 1)[-1]]
    for k in window:
        pts.extend(period_vertices(spec, k))
    return pts


@dataclass(frozen=True)
class PolygonGeometry:
    normals: list[LVec]
    feet: list[LVec]
    vertices: list[LVec]
    half_lengths_fwd: np.ndarray = field(repr=False)
    half_lengths_bwd: np.ndarray = field(repr=False)
    edge_lengths: np.ndarray = field(repr=False)


def geometry(spec: PolygonSpec) -> PolygonGeometry:
    etas = normals(spec)
    fwd, bwd = half_lengths(spec)
    return PolygonGeometry(
        normals=etas,
        feet=[h * eta for h, eta in zip(spec.hs, etas)],
        vertices=vertices(spec),
        half_lengths_fwd=fwd,
        half_lengths_bwd=bwd,
        edge_lengths=fwd + bwd,
    )


def coarea_formula(spec: PolygonSpec) -> float:
    """Half the sum of support number times edge length (defined for any real ``hs``)."""
    return 0.5 * float(np.dot(spec.hs, edge_lengths(spec)))


def coarea_geometric(spec: PolygonSpec) -> float:
    """Lebesgue area of one fundamental domain of ``H_t`` acting on F minus P.

    The domain is the fan of triangles ``(0, V[i-1], V[i])`` over the vertices of
    one period, preceded by the last vertex of the previous period. Areas come
    from the Euclidean shoelace formula. ``H_s`` has determinant 1, so the
    polygon is first rotated by ``H_{-t/2}`` to centre the period on the time
    axis, which limits cancellation in the cross products.
    """
    report = is_t_convex(spec)
    if not report:
        raise NotTConvex(f"edges {list(report.offending)} have non-positive length")
    shift = -0.5 * spec.t
    pts = period_vertices(spec, -1, shift)[-1:] + period_vertices(spec, 0, shift)
    cross = math.fsum(a.x1 * b.x2 - a.x2 * b.x1 for a, b in zip(pts, pts[1:]))
    # boundary runs left to right above the origin, so the fan is clockwise
    return -0.5 * cross


def support_residuals(spec: PolygonSpec) -> np.ndarray:
    """Relative residuals of each vertex against its two adjacent support lines."""
    etas = normals(spec) + [unit_timelike(spec.t)]
    hs = spec.hs + spec.hs[:1]
    out = []
    for i, v in enumerate(vertices(spec)):
        for j in (i, i + 1):
            out.append(abs(lprod(v, etas[j]) + hs[j]) / max(1.0, abs(hs[j])))
    return np.array(out)
