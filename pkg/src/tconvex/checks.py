"""Acceptance criteria as seeded, self-contained checks.

Each check returns a :class:`CheckResult`; ``run_all`` drives the ``check``
CLI command and the acceptance test module.
"""

from __future__ import annotations

import contextlib
import io
import json
import math
import os
import tempfile
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import coarea, cone_manifold, lorentz, orthoscheme, polygon, sampling
from .errors import Infeasible, NoConvergence
from .lorentz import LVec


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    metrics: dict = field(default_factory=dict)

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {self.detail}"


def coarea_oracle(rng, trials: int = 1000) -> CheckResult:
    worst = 0.0
    for _ in range(trials):
        spec = sampling.random_spec(rng, (1, 10))
        geo = polygon.coarea_geometric(spec)
        worst = max(worst, abs(polygon.coarea_formula(spec) - geo) / geo)
    return CheckResult("coarea_oracle", worst <= 1e-9,
                       f"max relative gap {worst:.3e} over {trials} specs (tol 1e-9)",
                       {"max_rel": worst})


def n1_closed_form(rng=None) -> CheckResult:
    t0 = math.asinh(1.0)
    spec = polygon.PolygonSpec((t0,), (1.0,))
    target = math.sqrt(2.0) - 1.0
    closed = (math.cosh(t0) - 1.0) / math.sinh(t0)
    values = {"formula": polygon.coarea_formula(spec),
              "geometric": polygon.coarea_geometric(spec),
              "closed": closed}
    worst = max(abs(v - target) for v in values.values())
    return CheckResult("n1_closed_form", worst <= 1e-12,
                       f"max |coarea - (sqrt2 - 1)| = {worst:.3e} (tol 1e-12)", values)


def positive_definite(rng, trials: int = 500) -> CheckResult:
    failures, min_margin = 0, math.inf
    for _ in range(trials):
        n = int(rng.integers(2, 13))
        report = coarea.is_positive_definite(coarea.gram(sampling.random_phis(rng, n)))
        min_margin = min(min_margin, report.margin)
        failures += not report.positive_definite
    return CheckResult("positive_definite", failures == 0,
                       f"{failures} failures in {trials}; min dominance margin {min_margin:.3e}",
                       {"failures": failures, "min_margin": min_margin})


def reversed_minkowski(rng, trials: int = 1000) -> CheckResult:
    worst_slack, missed_equality = math.inf, 0
    for _ in range(trials):
        n = int(rng.integers(2, 11))
        phis = sampling.random_phis(rng, n)
        G = coarea.gram(phis)
        hP = sampling.random_interior_h(rng, phis)
        hQ = sampling.random_interior_h(rng, phis)
        rep = coarea.reversed_minkowski(G, hP, hQ)
        worst_slack = min(worst_slack, rep.slack / rep.rhs)
        lam = rng.uniform(0.1, 10.0)
        missed_equality += not coarea.reversed_minkowski(G, hP, lam * hP).equality
    ok = worst_slack >= -1e-12 and missed_equality == 0
    return CheckResult("reversed_minkowski", ok,
                       f"min relative slack {worst_slack:.3e} (tol -1e-12); "
                       f"{missed_equality} homothetic pairs not flagged",
                       {"min_rel_slack": worst_slack, "missed_equality": missed_equality})


def dihedral_two_paths(rng, trials: int = 500) -> CheckResult:
    worst = 0.0
    for _ in range(trials):
        n = int(rng.integers(3, 11))
        worst = max(worst, orthoscheme.dihedral_cosines(sampling.random_phis(rng, n)).discrepancy)
    return CheckResult("dihedral_two_paths", worst <= 1e-12,
                       f"max |closed - gram| = {worst:.3e} (tol 1e-12)", {"max_abs": worst})


def cross_ratio_identity(rng, trials: int = 200) -> CheckResult:
    worst, worst_shift = 0.0, 0.0
    for _ in range(trials):
        n = int(rng.integers(3, 11))
        phis = sampling.random_phis(rng, n)
        for k in range(n):
            w = orthoscheme.cross_ratio(phis, k)
            worst = max(worst, w.identity_residual)
            for tr in ((0.0, 1.0, 2.0), (0.3, 1.0, 1.5)):
                other = orthoscheme.cross_ratio(phis, k, tr)
                worst_shift = max(worst_shift, abs(other.lam - w.lam) / w.lam,
                                  other.identity_residual)
    ok = worst <= 1e-9 and worst_shift <= 1e-9
    return CheckResult("cross_ratio_identity", ok,
                       f"identity residual {worst:.3e}, transversal change {worst_shift:.3e} (tol 1e-9)",
                       {"max_residual": worst, "max_transversal": worst_shift})


def inverse_round_trip(rng, trials: int = 100) -> CheckResult:
    failures, worst = 0, 0.0
    for _ in range(trials):
        n = int(rng.integers(3, 9))
        cos = orthoscheme.dihedral_cosines(sampling.random_phis(rng, n)).dihedral_cos
        try:
            found = orthoscheme.solve_angles_from_dihedral(cos ** 2)
        except (NoConvergence, Infeasible):
            failures += 1
            continue
        back = orthoscheme.dihedral_cosines(found).dihedral_cos
        worst = max(worst, orthoscheme.cyclic_distance(cos, back))
    ok = failures == 0 and worst <= 1e-6
    return CheckResult("inverse_round_trip", ok,
                       f"failure rate {failures}/{trials}; max cosine gap {worst:.3e} (tol 1e-6)",
                       {"failures": failures, "max_abs": worst})


def cone_angle(rng, trials: int = 1000) -> CheckResult:
    worst, out_of_range = 0.0, 0
    for _ in range(trials):
        rep = cone_manifold.s_cone_angle(*rng.uniform(0.05, 2.0, size=3))
        worst = max(worst, rep.discrepancy)
        for theta in (rep.theta_sum, rep.theta_closed):
            out_of_range += not (2 * math.pi < theta < 3 * math.pi)
    grid = np.linspace(0.02, 4.0, 100)
    equal = np.array([cone_manifold.cos_half_cone_angle_equal(p) for p in grid])
    general = np.array([cone_manifold.cos_half_cone_angle(p, p, p) for p in grid])
    equal_gap = float(np.max(np.abs(equal - general)))
    monotone = bool(np.all(np.diff(equal) > 0) and np.all((equal > -1) & (equal < 0)))
    ok = worst <= 1e-9 and out_of_range == 0 and equal_gap <= 1e-12 and monotone
    return CheckResult("cone_angle", ok,
                       f"max |sum - closed| {worst:.3e} (tol 1e-9); {out_of_range} out of (2pi, 3pi); "
                       f"equal-angle gap {equal_gap:.3e}; monotone onto (-1,0): {monotone}",
                       {"max_abs": worst, "out_of_range": out_of_range,
                        "equal_gap": equal_gap, "monotone": monotone})


def sinh_identity(rng, trials: int = 1000) -> CheckResult:
    worst = max(cone_manifold.sinh_identity_residual(*rng.uniform(-3, 3, size=3))
                for _ in range(trials))
    return CheckResult("sinh_identity", worst <= 1e-12,
                       f"max residual {worst:.3e} (tol 1e-12)", {"max_residual": worst})


def _random_future(rng) -> LVec:
    return lorentz.hyp_translate(rng.uniform(-2, 2), LVec(0.0, rng.uniform(0.2, 5.0)))


def invariance_suite(rng, trials: int = 200) -> CheckResult:
    iso = group = homog = conj = 0.0
    for _ in range(trials):
        x, y = _random_future(rng), _random_future(rng)
        s = rng.uniform(-3, 3)
        xs, ys = lorentz.hyp_translate(s, x), lorentz.hyp_translate(s, y)
        iso = max(iso, abs(lorentz.langle(xs, ys) - lorentz.langle(x, y)),
                  abs(lorentz.lprod(xs, ys) - lorentz.lprod(x, y)) / max(1.0, abs(lorentz.lprod(x, y))))

        spec = sampling.random_spec(rng, (1, 6))
        cur, nxt = polygon.period_vertices(spec, 0), polygon.period_vertices(spec, 1)
        for v, w in zip(cur, nxt):
            moved = lorentz.hyp_translate(spec.t, v)
            scale = max(1.0, abs(w.x1), abs(w.x2))
            group = max(group, abs(moved.x1 - w.x1) / scale, abs(moved.x2 - w.x2) / scale)

        lam = rng.uniform(0.1, 10.0)
        base = polygon.coarea_formula(spec)
        homog = max(homog, abs(polygon.coarea_formula(spec.scaled(lam)) - lam ** 2 * base)
                    / (lam ** 2 * abs(base)))

        if spec.n >= 2:
            shift = int(rng.integers(1, spec.n + 1))
            G = coarea.gram(spec.phis).entries
            Gr = coarea.gram(np.roll(spec.phis, -shift)).entries
            P = np.roll(np.eye(spec.n), -shift, axis=0)
            conj = max(conj, float(np.max(np.abs(Gr - P @ G @ P.T))))
    ok = iso <= 1e-10 and group <= 1e-10 and homog <= 1e-12 and conj <= 1e-14
    return CheckResult("invariance_suite", ok,
                       f"isometry {iso:.2e} (1e-10), group {group:.2e} (1e-10), "
                       f"homogeneity {homog:.2e} (1e-12), relabeling {conj:.2e} (1e-14)",
                       {"isometry": iso, "group": group, "homogeneity": homog, "relabel": conj})


def cli_determinism(rng=None) -> CheckResult:
    from .cli import main

    with tempfile.TemporaryDirectory() as tmp:
        outputs, svgs = [], []
        for run in range(2):
            svg = os.path.join(tmp, f"run{run}.svg")
            buf = io.StringIO()
            with contextlib.redirect_stdout(buf):
                code = main(["polygon", "--phis", repr(math.asinh(1.0)), "--hs", "1",
                             "--periods", "3", "--svg", svg])
            if code != 0:
                return CheckResult("cli_determinism", False, f"polygon exited with {code}")
            outputs.append(json.loads(buf.getvalue()))
            with open(svg, "rb") as f:
                svgs.append(f.read())
    lengths = outputs[0]["boundary_edge_lengths"]
    spread = max(lengths) - min(lengths)
    identical = svgs[0] == svgs[1]
    ok = identical and len(lengths) == 3 and spread <= 1e-12
    return CheckResult("cli_determinism", ok,
                       f"byte-identical svg: {identical}; {len(lengths)} boundary edges, "
                       f"length spread {spread:.3e} (tol 1e-12)",
                       {"identical": identical, "spread": spread})


CRITERIA: list[tuple[str, Callable[..., CheckResult]]] = [
    ("coarea_oracle", coarea_oracle),
    ("n1_closed_form", n1_closed_form),
    ("positive_definite", positive_definite),
    ("reversed_minkowski", reversed_minkowski),
    ("dihedral_two_paths", dihedral_two_paths),
    ("cross_ratio_identity", cross_ratio_identity),
    ("inverse_round_trip", inverse_round_trip),
    ("cone_angle", cone_angle),
    ("sinh_identity", sinh_identity),
    ("invariance_suite", invariance_suite),
    ("cli_determinism", cli_determinism),
]


def run_check(name: str, seed: int = 0) -> CheckResult:
    for index, (key, fn) in enumerate(CRITERIA):
        if key == name:
            return fn(np.random.default_rng([seed, index]))
    raise KeyError(name)


def run_all(seed: int = 0) -> list[CheckResult]:
    return [run_check(name, seed) for name, _ in CRITERIA]
