"""Boundary sweeps: largest alpha per beta at which IC is still respected.

For each beta on an even grid, alpha is scanned on an even grid over
[0, 1-beta] and the largest grid value whose quantifier stays within the
channel capacity is reported, exactly as in the reference numerics.  An
opt-in bisection refinement sharpens the crossing but the grid answer is
what gets reported by default.

The quantum reference is the Tsirelson-Landau-Masanes circle
sqrt(1/2 - beta^2) for the two non-local slices and the straight segment
(1 - beta)/sqrt(2) for the local-vertex slice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .infotheory import channel_capacity
from .protocol import SlicePoint, table1_joints
from .redundancy import ic_rac, ic_red

QUANTIFIERS = ("ICR", "ICO")

# Absorbs floating-point dust when a quantifier sits exactly on the
# capacity (happens at degenerate slice corners and quantum-tangent
# edges, where the measured excess is below 1e-16).  Must stay small
# relative to the capacity itself — at p_c = 0.50001 the capacity is
# only 2.9e-10 and a larger slack would visibly shift the boundary.
FEASIBLE_ATOL = 1e-15

_SQRT_HALF = math.sqrt(0.5)


@dataclass(frozen=True)
class SweepConfig:
    slice_id: str
    p_c: float = 0.5001
    beta_steps: int = 50
    alpha_steps: int = 3000
    quantifiers: tuple[str, ...] = ("ICR", "ICO")
    lambda_method: str = "golden"
    lambda_tol: float = 1e-10
    grid_lambda: int = 1000
    refine: bool = False

    def __post_init__(self):
        if self.beta_steps < 2 or self.alpha_steps < 2:
            raise ValueError("grids need at least 2 steps")
        if not 0.5 < self.p_c <= 1.0:
            raise ValueError(f"p_c={self.p_c} outside (1/2, 1]")
        for q in self.quantifiers:
            if q not in QUANTIFIERS:
                raise ValueError(f"unknown quantifier {q!r}")


@dataclass(frozen=True)
class BoundaryResult:
    """Largest feasible alpha, or a sentinel status.

    status is one of ``boundary`` (a genuine crossing), ``no_violation``
    (even alpha = 1 - beta respects IC; alpha is 1 - beta) and
    ``all_violate`` (no grid point is feasible; alpha is None).
    """

    alpha: float | None
    status: str


def quantifier_value(
    slice_id: str,
    alpha: float,
    beta: float,
    p_c: float,
    quantifier: str,
    *,
    lambda_method: str = "golden",
    lambda_tol: float = 1e-10,
    grid_lambda: int = 1000,
) -> float:
    """Evaluate ICR (redundancy-based) or ICO (RAC-based) at a slice point.

    Uses the closed-form slice joints; the protocol simulation route is
    oracle-checked against them elsewhere to 1e-12.
    """
    j1, j2 = table1_joints(SlicePoint(slice_id, alpha, beta, p_c))
    if quantifier == "ICO":
        return ic_rac(j1, j2)
    if quantifier == "ICR":
        return ic_red(
            j1, j2, method=lambda_method, tol=lambda_tol, grid_n=grid_lambda
        )
    raise ValueError(f"unknown quantifier {quantifier!r}")


def boundary_alpha(
    slice_id: str,
    beta: float,
    p_c: float,
    quantifier: str,
    *,
    alpha_steps: int = 3000,
    refine: bool = False,
    **lambda_opts,
) -> BoundaryResult:
    """Largest grid alpha in [0, 1-beta] whose quantifier stays within capacity.

    The scan walks the grid downward from alpha = 1 - beta and stops at
    the first feasible point, which is exactly the largest feasible grid
    value whether or not feasibility is monotone.
    """
    if not 0.0 <= beta <= 1.0:
        raise ValueError(f"beta={beta} outside [0, 1]")
    k = channel_capacity(p_c)
    alphas = np.linspace(0.0, 1.0 - beta, alpha_steps)

    def feasible(alpha: float) -> bool:
        value = quantifier_value(slice_id, alpha, beta, p_c, quantifier, **lambda_opts)
        return value <= k + FEASIBLE_ATOL

    previous = None  # smallest infeasible alpha seen, brackets the crossing
    for idx in range(alpha_steps - 1, -1, -1):
        alpha = float(alphas[idx])
        if feasible(alpha):
            if idx == alpha_steps - 1:
                return BoundaryResult(alpha, "no_violation")
            if refine and previous is not None:
                step = alphas[1] - alphas[0] if alpha_steps > 1 else 0.0
                alpha = _bisect(feasible, alpha, previous, max(step * 1e-3, 1e-12))
            return BoundaryResult(alpha, "boundary")
        previous = alpha
    return BoundaryResult(None, "all_violate")


def _bisect(feasible, lo: float, hi: float, tol: float) -> float:
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if feasible(mid):
            lo = mid
        else:
            hi = mid
    return lo


def quantum_boundary(slice_id: str, beta: float) -> float:
    """Quantum reference: the TLM circle (slices 1-2) or the line (slice 3)."""
    if slice_id in ("slice1", "slice2"):
        if not 0.0 <= beta <= _SQRT_HALF + 1e-12:
            raise ValueError(f"beta={beta} outside [0, 1/sqrt(2)] for {slice_id}")
        return math.sqrt(max(0.5 - beta * beta, 0.0))
    if slice_id == "slice3":
        if not 0.0 <= beta <= 1.0:
            raise ValueError(f"beta={beta} outside [0, 1] for slice3")
        return (1.0 - beta) * _SQRT_HALF
    raise ValueError(f"unknown slice {slice_id!r}")


@dataclass(frozen=True)
class CurveRow:
    beta: float
    icr: BoundaryResult | None
    ico: BoundaryResult | None
    alpha_quantum: float | None


@dataclass(frozen=True)
class BoundaryCurve:
    config: SweepConfig
    rows: tuple[CurveRow, ...]


def run_sweep(cfg: SweepConfig) -> BoundaryCurve:
    """Trace both boundary curves plus the quantum reference over the beta grid.

    Point evaluations are pure; rows are assembled in beta order so the
    output is deterministic for a fixed config.
    """
    lambda_opts = dict(
        lambda_method=cfg.lambda_method,
        lambda_tol=cfg.lambda_tol,
        grid_lambda=cfg.grid_lambda,
    )
    rows = []
    for beta in np.linspace(0.0, 1.0, cfg.beta_steps):
        beta = float(beta)
        results: dict[str, BoundaryResult | None] = {"ICR": None, "ICO": None}
        for q in cfg.quantifiers:
            results[q] = boundary_alpha(
                cfg.slice_id,
                beta,
                cfg.p_c,
                q,
                alpha_steps=cfg.alpha_steps,
                refine=cfg.refine,
                **lambda_opts,
            )
        try:
            alpha_q = quantum_boundary(cfg.slice_id, beta)
        except ValueError:
            alpha_q = None
        rows.append(CurveRow(beta, results["ICR"], results["ICO"], alpha_q))
    return BoundaryCurve(cfg, tuple(rows))
