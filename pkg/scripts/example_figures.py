"""Render a few reference polygons to SVG and print their coarea."""

import argparse
import math
from dataclasses import dataclass
from pathlib import Path

from tconvex.polygon import PolygonSpec, coarea_formula, coarea_geometric
from tconvex.svg import emit_svg

EXAMPLES = {
    "elementary": PolygonSpec((math.asinh(1.0),), (1.0,)),
    "triangle_period": PolygonSpec((0.3, 0.4, 0.5), (1.0, 1.0, 1.0)),
    "skewed": PolygonSpec((0.2, 0.9, 0.5, 0.4), (1.275, 1.314, 1.19, 1.227)),
}


@dataclass
class FigureConfig:
    outdir: str = "figures"
    periods: int = 3


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--outdir", default=FigureConfig.outdir)
    p.add_argument("--periods", type=int, default=FigureConfig.periods)
    cfg = FigureConfig(**vars(p.parse_args()))
    out = Path(cfg.outdir)
    out.mkdir(parents=True, exist_ok=True)
    for name, spec in EXAMPLES.items():
        path = out / f"{name}.svg"
        emit_svg(spec, cfg.periods, str(path))
        print(f"{name}: coarea {coarea_formula(spec):.12f} (fan {coarea_geometric(spec):.12f}) -> {path}")


if __name__ == "__main__":
    main()
