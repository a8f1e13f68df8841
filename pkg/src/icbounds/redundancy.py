"""Redundant information and the two information-causality quantifiers.

The redundancy measure follows the Harder-Salge-Polani recipe for two
binary indicators.  From each joint p(a, b_i) one forms the conditionals
p(A|b_i); their convex hull is a segment in the simplex of A.  Each
conditional of one indicator is then projected onto the other
indicator's segment under Kullback-Leibler divergence, the "projected
information" is accumulated, and redundant information is the minimum of
the two directed projected informations.

D_KL(target || lam*p0 + (1-lam)*p1) is convex in lam, so the paper-era
even grid over lam can be replaced by a bracketed golden-section search;
the grid remains available (``method="grid"``) as an oracle.

The two quantifiers:

    ic_rac = I(A1;B1) + I(A2;B2)
    ic_red = I(A;B1) + I(A;B2) - I_r(A;B1,B2)

``markov_coupling`` builds the hidden-variable joints used to check the
bound ic_red <= I(A;(B1,B2)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .infotheory import mutual_information
from .protocol import marginal_bit_joint

# Both joints are supposed to come from the same protocol run; a larger
# mismatch of the A-marginals signals a caller error.
MARGINAL_ATOL = 1e-9

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class ConditionalFamily:
    """Conditionals p(A|b), one simplex point per b with p(b) > 0."""

    points: tuple[tuple[float, ...], ...]
    weights: tuple[float, ...]
    degenerate: bool  # true when some p(b) = 0 dropped a hull point


@dataclass(frozen=True)
class ProjectionResult:
    lambda_star: float
    projected: np.ndarray
    divergence: float


def conditionals(j: np.ndarray) -> ConditionalFamily:
    """Split a joint p(a, b) into p(A|b) points weighted by p(b)."""
    t = np.asarray(j, dtype=float)
    pb = t.sum(axis=0)
    points = []
    weights = []
    for b in range(t.shape[1]):
        if pb[b] > 0.0:
            points.append(tuple(t[:, b] / pb[b]))
            weights.append(float(pb[b]))
    if not points:
        raise ValueError("joint has no support")
    return ConditionalFamily(tuple(points), tuple(weights), len(points) < t.shape[1])


def _kl_to_mix(t, p0, p1, lam: float) -> float:
    s = 0.0
    one = 1.0 - lam
    for k in range(len(t)):
        tk = t[k]
        if tk > 0.0:
            q = lam * p0[k] + one * p1[k]
            if q <= 0.0:
                return math.inf
            s += tk * math.log2(tk / q)
    return s


def golden_section_min(f, a: float, b: float, tol: float = 1e-10):
    """Minimize a convex scalar function on [a, b]; returns (x, f(x)).

    Endpoints are compared explicitly, so a minimum attained at the
    boundary is returned exactly.
    """
    a0, b0 = a, b
    fa, fb = f(a), f(b)
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    best = min([(fa, a0), (fb, b0), (f(x), x)], key=lambda pair: pair[0])
    return best[1], best[0]


def kl_project(
    target,
    hull: ConditionalFamily,
    *,
    method: str = "golden",
    tol: float = 1e-10,
    grid_n: int = 1000,
) -> ProjectionResult:
    """KL projection of a simplex point onto the hull of two conditionals.

    The mixture convention is lam*points[0] + (1-lam)*points[1], i.e.
    lam = 1 selects the b = 0 conditional.  A degenerate single-point
    hull returns that point with lam = 0.  If the target has support
    nowhere covered by the hull, the divergence is +inf (a legal value:
    an infinite candidate simply never wins downstream minima).
    """
    t = tuple(np.asarray(target, dtype=float))
    if len(hull.points) == 1:
        p = hull.points[0]
        div = _kl_to_mix(t, p, p, 0.0)
        return ProjectionResult(0.0, np.asarray(p), div)
    p0, p1 = hull.points
    if any(tk > 0.0 and p0[k] <= 0.0 and p1[k] <= 0.0 for k, tk in enumerate(t)):
        return ProjectionResult(0.0, np.asarray(p1), math.inf)

    def f(lam: float) -> float:
        return _kl_to_mix(t, p0, p1, lam)

    if method == "golden":
        lam, val = golden_section_min(f, 0.0, 1.0, tol)
    elif method == "grid":
        lams = [i / grid_n for i in range(grid_n + 1)]
        vals = [f(lam) for lam in lams]
        idx = min(range(len(vals)), key=lambda i: vals[i])
        lam, val = lams[idx], vals[idx]
    else:
        raise ValueError(f"unknown lambda method {method!r}")
    mix = lam * np.asarray(p0) + (1.0 - lam) * np.asarray(p1)
    return ProjectionResult(lam, mix, val)


def projected_information(
    j1: np.ndarray,
    j2: np.ndarray,
    *,
    method: str = "golden",
    tol: float = 1e-10,
    grid_n: int = 1000,
) -> float:
    """Directed projected information of B1 through B2's hull, in bits."""
    a1 = np.asarray(j1, dtype=float)
    a2 = np.asarray(j2, dtype=float)
    _check_common_marginal(a1, a2)
    hull = conditionals(a2)
    pa = a1.sum(axis=1)
    total = 0.0
    for b1 in range(a1.shape[1]):
        w = float(a1[:, b1].sum())
        if w <= 0.0:
            continue
        target = a1[:, b1] / w
        res = kl_project(target, hull, method=method, tol=tol, grid_n=grid_n)
        proj = res.projected
        for a in range(a1.shape[0]):
            v = a1[a, b1]
            if v > 0.0:
                if proj[a] <= 0.0:
                    return -math.inf
                total += v * math.log2(proj[a] / pa[a])
    return total


def _check_common_marginal(j1: np.ndarray, j2: np.ndarray):
    dev = float(np.abs(j1.sum(axis=1) - j2.sum(axis=1)).max())
    if dev > MARGINAL_ATOL:
        raise ValueError(f"A-marginals of the two joints differ by {dev}")


def redundant_information(j1, j2, **opts) -> float:
    """HSP redundant information: min of the two directed projections."""
    return min(
        projected_information(j1, j2, **opts),
        projected_information(j2, j1, **opts),
    )


def ic_red(j1, j2, **opts) -> float:
    """Redundancy-based quantifier I(A;B1) + I(A;B2) - I_r."""
    return (
        mutual_information(j1)
        + mutual_information(j2)
        - redundant_information(j1, j2, **opts)
    )


def ic_rac(j1, j2) -> float:
    """Random-access-code quantifier I(A1;B1) + I(A2;B2)."""
    _check_common_marginal(np.asarray(j1, float), np.asarray(j2, float))
    return mutual_information(marginal_bit_joint(j1, 1)) + mutual_information(
        marginal_bit_joint(j2, 2)
    )


def markov_coupling(weights, pa, pb1, pb2) -> np.ndarray:
    """Hidden-variable coupling p(a,b1,b2) = sum_l w(l) p(a|l) p(b1|l) p(b2|l)."""
    w = np.asarray(weights, dtype=float)
    a = np.asarray(pa, dtype=float)
    b1 = np.asarray(pb1, dtype=float)
    b2 = np.asarray(pb2, dtype=float)
    if not (w.shape[0] == a.shape[0] == b1.shape[0] == b2.shape[0]):
        raise ValueError("component tables must share the hidden-variable axis")
    return np.einsum("l,la,lb,lc->abc", w, a, b1, b2)
