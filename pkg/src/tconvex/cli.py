"""Command-line entry point: ``tconvex <command> [--config FILE] [overrides]``.

Exit status is 0 on success, 1 on a domain error (its class name goes to
stderr) and 2 when the job configuration cannot be parsed.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import math
import sys
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import checks, coarea, cone_manifold, orthoscheme, polygon
from .errors import BadInput, GeometryError
from .lorentz import ldist
from .svg import emit_svg

COMMANDS = ("polygon", "gram", "orthoscheme", "solve", "cone", "check")
FORMATS = ("json", "csv")
REQUIRED = {
    "polygon": ("phis", "hs"),
    "gram": ("phis",),
    "orthoscheme": ("phis",),
    "solve": ("dihedral_sq",),
    "cone": ("phis",),
    "check": (),
}


class ConfigError(Exception):
    pass


@dataclass
class JobConfig:
    command: str
    phis: Optional[list[float]] = None
    hs: Optional[list[float]] = None
    dihedral_sq: Optional[list[float]] = None
    periods: int = 3
    seed: int = 0
    out_format: str = "json"
    svg_path: Optional[str] = None

    def validate(self) -> "JobConfig":
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        if self.out_format not in FORMATS:
            raise ConfigError(f"unknown format {self.out_format!r}")
        for name in ("phis", "hs", "dihedral_sq"):
            value = getattr(self, name)
            if value is None:
                continue
            if not isinstance(value, list) or not all(
                    isinstance(x, (int, float)) and not isinstance(x, bool) for x in value):
                raise ConfigError(f"{name} must be a list of numbers")
            setattr(self, name, [float(x) for x in value])
        for name in ("periods", "seed"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise ConfigError(f"{name} must be an integer")
        if self.periods < 0:
            raise ConfigError("periods must be non-negative")
        missing = [f for f in REQUIRED[self.command] if getattr(self, f) is None]
        if missing:
            raise ConfigError(f"command {self.command!r} requires {', '.join(missing)}")
        return self


def load_config(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError("config must be a single JSON object")
    known = {f.name for f in dataclasses.fields(JobConfig)}
    unknown = set(data) - known
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    return data


def _number_list(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise ConfigError(f"bad number list {text!r}") from exc


def _floats(values) -> list:
    return [float(v) for v in values]


def _points(pts) -> list:
    return [[p.x1, p.x2] for p in pts]


def run_polygon(cfg: JobConfig) -> dict:
    spec = polygon.PolygonSpec(tuple(cfg.phis), tuple(cfg.hs))
    geo = polygon.geometry(spec)
    report = polygon.is_t_convex(spec)
    pts = polygon.boundary(spec, cfg.periods)
    out = {
        "command": "polygon",
        "phis": list(spec.phis),
        "hs": list(spec.hs),
        "n": spec.n,
        "t": spec.t,
        "normals": _points(geo.normals),
        "feet": _points(geo.feet),
        "vertices": _points(geo.vertices),
        "half_lengths_fwd": _floats(geo.half_lengths_fwd),
        "half_lengths_bwd": _floats(geo.half_lengths_bwd),
        "edge_lengths": _floats(geo.edge_lengths),
        "t_convex": report.ok,
        "offending_edges": list(report.offending),
        "coarea_formula": polygon.coarea_formula(spec),
        "coarea_geometric": polygon.coarea_geometric(spec) if report.ok else None,
        "periods": cfg.periods,
        "boundary": _points(pts),
        "boundary_edge_lengths": [ldist(p, q) for p, q in zip(pts, pts[1:])],
    }
    if cfg.svg_path:
        emit_svg(spec, cfg.periods, cfg.svg_path)
        out["svg"] = cfg.svg_path
    return out


def run_gram(cfg: JobConfig) -> dict:
    G = coarea.gram(cfg.phis)
    rep = coarea.is_positive_definite(G)
    return {
        "command": "gram",
        "phis": list(G.phis),
        "entries": G.entries.tolist(),
        "row_margins": list(rep.row_margins),
        "dominance_margin": rep.margin,
        "factorization_ok": rep.factorization_ok,
        "min_pivot": rep.min_pivot,
        "positive_definite": rep.positive_definite,
    }


def run_orthoscheme(cfg: JobConfig) -> dict:
    if len(cfg.phis) == 2:
        return {"command": "orthoscheme", "phis": cfg.phis,
                "arc_length": orthoscheme.arc_length_n2(*cfg.phis)}
    ortho = orthoscheme.dihedral_cosines(cfg.phis)
    witnesses = [orthoscheme.cross_ratio(cfg.phis, k) for k in range(ortho.n)]
    return {
        "command": "orthoscheme",
        "phis": list(ortho.phis),
        "dihedral_cos": _floats(ortho.dihedral_cos),
        "dihedral_cos_gram": _floats(ortho.gram_cos),
        "dihedral_angles": _floats(ortho.dihedral_angles),
        "right_angle_pairs": [list(p) for p in ortho.right_angle_pairs],
        "cross_ratios": [
            {"k": w.k, "lambda": w.lam, "u": list(w.u), "cos_squared": w.cos_squared,
             "identity_residual": w.identity_residual}
            for w in witnesses
        ],
    }


def run_solve(cfg: JobConfig) -> dict:
    A = np.asarray(cfg.dihedral_sq)
    phis = orthoscheme.solve_angles_from_dihedral(A)
    cos = orthoscheme.dihedral_cosines(phis).dihedral_cos
    residuals = cos ** 2 - A
    return {
        "command": "solve",
        "dihedral_sq": cfg.dihedral_sq,
        "phis": _floats(phis),
        "dihedral_cos": _floats(cos),
        "residuals": _floats(residuals),
        "max_residual": float(np.max(np.abs(residuals))),
    }


def run_cone(cfg: JobConfig) -> dict:
    if len(cfg.phis) != 3:
        raise BadInput(f"cone needs the merged triple of 3 angles, got {len(cfg.phis)}")
    rep = cone_manifold.s_cone_angle(*cfg.phis)
    return {
        "command": "cone",
        "merged_triple": list(rep.merged_triple),
        "face_type": rep.face_type,
        "theta_sum": rep.theta_sum,
        "theta_closed": rep.theta_closed,
        "cos_half_theta": cone_manifold.cos_half_cone_angle(*rep.merged_triple),
        "dihedral_angles": list(rep.dihedral_angles),
        "n_face_total_angle": cone_manifold.N_FACE_TOTAL_ANGLE,
    }


def run_check(cfg: JobConfig) -> dict:
    results = checks.run_all(cfg.seed)
    for r in results:
        print(r.line(), file=sys.stderr)
    passed = sum(r.passed for r in results)
    return {
        "command": "check",
        "seed": cfg.seed,
        "passed": passed,
        "failed": len(results) - passed,
        "criteria": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
    }


RUNNERS = {
    "polygon": run_polygon,
    "gram": run_gram,
    "orthoscheme": run_orthoscheme,
    "solve": run_solve,
    "cone": run_cone,
    "check": run_check,
}


def _flatten(prefix: str, value, rows: list):
    if isinstance(value, dict):
        for key, v in value.items():
            _flatten(f"{prefix}.{key}" if prefix else key, v, rows)
    elif isinstance(value, (list, tuple)):
        for i, v in enumerate(value):
            _flatten(f"{prefix}[{i}]", v, rows)
    else:
        rows.append((prefix, "" if value is None else repr(value) if isinstance(value, float) else value))


def write_output(result: dict, fmt: str, stream) -> None:
    if fmt == "json":
        json.dump(result, stream, indent=2, allow_nan=False)
        stream.write("\n")
        return
    rows: list = []
    _flatten("", result, rows)
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(("key", "value"))
    writer.writerows(rows)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tconvex", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--config", help="JSON job file (a single flat object)")
    p.add_argument("--phis", help="comma-separated angles in radians")
    p.add_argument("--hs", help="comma-separated support numbers")
    p.add_argument("--dihedral-sq", dest="dihedral_sq", help="comma-separated squared dihedral cosines")
    p.add_argument("--periods", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--svg", dest="svg_path")
    p.add_argument("--format", dest="out_format", choices=FORMATS)
    return p


def parse_config(argv) -> JobConfig:
    args = build_parser().parse_args(argv)
    data = load_config(args.config) if args.config else {}
    data["command"] = args.command
    for name in ("phis", "hs", "dihedral_sq"):
        text = getattr(args, name)
        if text is not None:
            data[name] = _number_list(text)
    for name in ("periods", "seed", "svg_path", "out_format"):
        value = getattr(args, name)
        if value is not None:
            data[name] = value
    return JobConfig(**data).validate()


def main(argv=None) -> int:
    try:
        cfg = parse_config(argv)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    try:
        result = RUNNERS[cfg.command](cfg)
    except GeometryError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    write_output(result, cfg.out_format, sys.stdout)
    if cfg.command == "check" and result["failed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
