"""Seeded verification suites shared by the CLI and the test suite.

Two suites:

* ``oracles`` — the protocol simulation must reproduce the closed-form
  slice joints entrywise, and the golden-section projection must never
  lose to a dense lambda grid.
* ``properties`` — the redundancy measure's inequalities (nonnegativity,
  cap by either marginal information, symmetry, self-redundancy, the
  rewriting of projected information through a KL term) plus the
  hidden-variable coupling bound and the convexity of the projection
  objective.

Each check returns a result record; nothing raises on failure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .boxes import SLICE_VERTEX, local_vertex, nl_vertex, validate
from .infotheory import kl_divergence, mutual_information, three_way_mi
from .protocol import ProtocolPoint, SlicePoint, simulate_joints, slice_box, table1_joints
from .redundancy import (
    _kl_to_mix,
    conditionals,
    ic_red,
    kl_project,
    markov_coupling,
    projected_information,
    redundant_information,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _random_slice_points(rng, n):
    slices = sorted(SLICE_VERTEX)
    for _ in range(n):
        slice_id = slices[rng.integers(len(slices))]
        alpha = rng.uniform(0.0, 1.0)
        beta = rng.uniform(0.0, 1.0 - alpha)
        p_c = rng.uniform(0.5 + 1e-6, 1.0)
        yield SlicePoint(slice_id, alpha, beta, p_c)


def _random_joint_pair(rng, n_a=4, n_b=2):
    """Two joints with an exactly common A-marginal."""
    pa = rng.dirichlet(np.ones(n_a))
    joints = []
    for _ in range(2):
        cond = rng.dirichlet(np.ones(n_b), size=n_a)
        joints.append(pa[:, None] * cond)
    return joints[0], joints[1]


def oracle_checks(seed: int = 0, n_points: int = 100) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for pt in _random_slice_points(rng, n_points):
        sim = simulate_joints(ProtocolPoint(slice_box(pt), pt.p_c))
        closed = table1_joints(pt)
        for s, c in zip(sim, closed):
            worst = max(worst, float(np.abs(s - c).max()))
    results = [
        CheckResult(
            "simulation-vs-closed-form",
            worst <= 1e-12,
            f"max entrywise deviation {worst:.3e} over {n_points} slice points",
        )
    ]

    worst_gap = -math.inf
    for _ in range(200):
        j1, j2 = _random_joint_pair(rng)
        hull = conditionals(j2)
        fam1 = conditionals(j1)
        target = np.asarray(fam1.points[0])
        golden = kl_project(target, hull, method="golden", tol=1e-10)
        grid = kl_project(target, hull, method="grid", grid_n=20000)
        if math.isinf(golden.divergence) and math.isinf(grid.divergence):
            continue
        worst_gap = max(worst_gap, golden.divergence - grid.divergence)
    results.append(
        CheckResult(
            "golden-vs-grid-20000",
            worst_gap <= 1e-9,
            f"worst golden-minus-grid divergence {worst_gap:.3e} bits",
        )
    )
    return results


def property_checks(
    seed: int = 0, n_hsp: int = 1000, n_coupling: int = 1000
) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    results = []

    dev = 0.0
    for mu in (0, 1):
        for nu in (0, 1):
            for sigma in (0, 1):
                dev = max(dev, *(c.deviation for c in validate(nl_vertex(mu, nu, sigma)).checks))
                for tau in (0, 1):
                    dev = max(
                        dev,
                        *(c.deviation for c in validate(local_vertex(mu, nu, sigma, tau)).checks),
                    )
    results.append(
        CheckResult("vertex-validity", dev == 0.0, f"worst vertex deviation {dev:.3e}")
    )

    worst = {
        "nonnegativity": 0.0,
        "cap": -math.inf,
        "symmetry": 0.0,
        "self-redundancy": 0.0,
        "footnote-identity": 0.0,
    }
    for _ in range(n_hsp):
        j1, j2 = _random_joint_pair(rng)
        i1 = mutual_information(j1)
        i2 = mutual_information(j2)
        ir = redundant_information(j1, j2)
        worst["nonnegativity"] = min(worst["nonnegativity"], ir)
        worst["cap"] = max(worst["cap"], ir - min(i1, i2))
        worst["symmetry"] = max(
            worst["symmetry"], abs(ir - redundant_information(j2, j1))
        )
        worst["self-redundancy"] = max(
            worst["self-redundancy"], abs(redundant_information(j1, j1) - i1)
        )
        # projected information rewritten through a joint-space KL term
        lhs = projected_information(j1, j2)
        hull = conditionals(j2)
        pb1 = j1.sum(axis=0)
        tilde = np.empty_like(j1)
        for b1 in range(2):
            target = j1[:, b1] / pb1[b1]
            tilde[:, b1] = kl_project(target, hull).projected * pb1[b1]
        rhs = i1 - kl_divergence(j1.reshape(-1), tilde.reshape(-1))
        worst["footnote-identity"] = max(worst["footnote-identity"], abs(lhs - rhs))

    results.append(
        CheckResult(
            "hsp-nonnegativity",
            worst["nonnegativity"] >= -1e-9,
            f"most negative redundancy {worst['nonnegativity']:.3e}",
        )
    )
    results.append(
        CheckResult(
            "hsp-cap-by-marginal-mi",
            worst["cap"] <= 1e-9,
            f"worst excess over min marginal MI {worst['cap']:.3e}",
        )
    )
    results.append(
        CheckResult(
            "hsp-symmetry",
            worst["symmetry"] == 0.0,
            f"worst asymmetry {worst['symmetry']:.3e}",
        )
    )
    results.append(
        CheckResult(
            "hsp-self-redundancy",
            worst["self-redundancy"] <= 1e-9,
            f"worst |I_r(j,j) - I| {worst['self-redundancy']:.3e}",
        )
    )
    results.append(
        CheckResult(
            "hsp-projected-information-identity",
            worst["footnote-identity"] <= 1e-9,
            f"worst identity mismatch {worst['footnote-identity']:.3e}",
        )
    )

    worst_bound = -math.inf
    for _ in range(n_coupling):
        n_hidden = 8
        w = rng.dirichlet(np.ones(n_hidden))
        pa = rng.dirichlet(np.ones(4), size=n_hidden)
        pb1 = rng.dirichlet(np.ones(2), size=n_hidden)
        pb2 = rng.dirichlet(np.ones(2), size=n_hidden)
        coupling = markov_coupling(w, pa, pb1, pb2)
        j1 = coupling.sum(axis=2)
        j2 = coupling.sum(axis=1)
        worst_bound = max(worst_bound, ic_red(j1, j2) - three_way_mi(coupling))
    results.append(
        CheckResult(
            "coupling-bound",
            worst_bound <= 1e-9,
            f"worst ic_red minus I(A;B1,B2) over {n_coupling} couplings: {worst_bound:.3e}",
        )
    )

    worst_conv = 0.0
    for _ in range(200):
        j1, j2 = _random_joint_pair(rng)
        hull = conditionals(j2)
        fam1 = conditionals(j1)
        t = fam1.points[0]
        p0, p1 = hull.points
        la, lb = sorted(rng.uniform(0.0, 1.0, size=2))
        fa = _kl_to_mix(t, p0, p1, la)
        fb = _kl_to_mix(t, p0, p1, lb)
        fm = _kl_to_mix(t, p0, p1, 0.5 * (la + lb))
        if math.isinf(fa) or math.isinf(fb):
            continue
        worst_conv = max(worst_conv, fm - 0.5 * (fa + fb))
    results.append(
        CheckResult(
            "projection-objective-convexity",
            worst_conv <= 1e-12,
            f"worst midpoint excess {worst_conv:.3e}",
        )
    )
    return results


def run(suite: str, seed: int = 0) -> list[CheckResult]:
    if suite == "oracles":
        return oracle_checks(seed)
    if suite == "properties":
        return property_checks(seed)
    if suite == "all":
        return oracle_checks(seed) + property_checks(seed)
    raise ValueError(f"unknown suite {suite!r}")
