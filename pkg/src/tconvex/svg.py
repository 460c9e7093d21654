"""Deterministic SVG figures of t-convex polygons.

The picture shows the light cone, the unit hyperbola and the polygon boundary
over a window of periods. Output depends only on the inputs.
"""

from __future__ import annotations

import math

from .errors import NotTConvex
from .lorentz import LVec
from .polygon import PolygonSpec, boundary, is_t_convex, normals

WIDTH, HEIGHT = 800, 600
MARGIN = 0.10
HYPERBOLA_SAMPLES = 256


def _fmt(v: float) -> str:
    s = f"{v:.6f}"
    return "0.000000" if s == "-0.000000" else s


class _Frame:
    """Uniform world-to-canvas map fitted to a set of points."""

    def __init__(self, pts: list[LVec]):
        xs = [p.x1 for p in pts]
        ys = [p.x2 for p in pts]
        self.xmin, self.xmax = min(xs), max(xs)
        self.ymin, self.ymax = min(ys), max(ys)
        w = max(self.xmax - self.xmin, 1e-9)
        h = max(self.ymax - self.ymin, 1e-9)
        self.xmin -= MARGIN * w
        self.xmax += MARGIN * w
        self.ymin -= MARGIN * h
        self.ymax += MARGIN * h
        self.scale = min(WIDTH / (self.xmax - self.xmin), HEIGHT / (self.ymax - self.ymin))
        self.cx = 0.5 * (self.xmin + self.xmax)
        self.cy = 0.5 * (self.ymin + self.ymax)

    def __call__(self, x1: float, x2: float) -> str:
        u = WIDTH / 2 + (x1 - self.cx) * self.scale
        v = HEIGHT / 2 - (x2 - self.cy) * self.scale
        return f"{_fmt(u)},{_fmt(v)}"


def render_svg(spec: PolygonSpec, periods: int) -> str:
    report = is_t_convex(spec)
    if not report:
        raise NotTConvex(f"edges {list(report.offending)} have non-positive length")
    pts = boundary(spec, periods)
    # with no periods drawn, fit to the feet of the support lines instead
    feet = [h * eta for h, eta in zip(spec.hs, normals(spec))]
    frame = _Frame([LVec(0.0, 0.0)] + (pts or feet))

    reach = max(abs(frame.xmin), abs(frame.xmax), abs(frame.ymin), abs(frame.ymax))
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>',
    ]
    for sign in (-1.0, 1.0):
        lines.append(
            f'<polyline class="light-cone" points="{frame(0.0, 0.0)} {frame(sign * reach, reach)}" '
            'fill="none" stroke="#888888" stroke-width="1" stroke-dasharray="6,4"/>'
        )
    xs = [frame.xmin + (frame.xmax - frame.xmin) * i / (HYPERBOLA_SAMPLES - 1)
          for i in range(HYPERBOLA_SAMPLES)]
    hyp = " ".join(frame(x, math.sqrt(1.0 + x * x)) for x in xs)
    lines.append(f'<polyline class="hyperbola" points="{hyp}" fill="none" '
                 'stroke="#3366cc" stroke-width="1"/>')
    if pts:
        poly = " ".join(frame(p.x1, p.x2) for p in pts)
        lines.append(f'<polyline class="boundary" points="{poly}" fill="none" '
                     'stroke="#000000" stroke-width="2"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def emit_svg(spec: PolygonSpec, periods: int, path) -> None:
    text = render_svg(spec, periods)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)
