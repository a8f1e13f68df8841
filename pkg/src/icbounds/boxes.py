"""2-2-2 no-signaling boxes: polytope vertices, slice mixtures, CHSH.

A box is the conditional distribution P(ab|xy) of two binary outputs
given two binary inputs.  The no-signaling polytope in this scenario has
8 extremal non-local vertices NL(mu,nu,sigma) and 16 local deterministic
vertices L(mu,nu,sigma,tau).  The slices studied here are convex
combinations  alpha*PR + beta*R + (1-alpha-beta)*noise  where PR is the
canonical non-local box NL(0,0,0) and R is one of three representative
vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

ATOL = 1e-12

# Canonical slice choices; the remaining vertices are input/output
# relabellings of these and are documented rather than enumerated.
SLICE_VERTEX = {"slice1": "NL010", "slice2": "NL110", "slice3": "L0000"}


def _check_bits(**named):
    for name, v in named.items():
        if v not in (0, 1):
            raise ValueError(f"{name} must be a bit, got {v!r}")


@dataclass(frozen=True)
class Box222:
    """Probability table P(ab|xy), stored dense as probs[a, b, x, y]."""

    probs: np.ndarray

    def __post_init__(self):
        arr = np.array(self.probs, dtype=float)
        if arr.shape != (2, 2, 2, 2):
            raise ValueError(f"box table must have shape (2,2,2,2), got {arr.shape}")
        arr.flags.writeable = False
        object.__setattr__(self, "probs", arr)


@dataclass(frozen=True)
class SliceSpec:
    """One point of a polytope slice: alpha*PR + beta*vertex(r_ns) + noise."""

    r_ns: str
    alpha: float
    beta: float

    def __post_init__(self):
        if self.alpha < 0 or self.beta < 0:
            raise ValueError("alpha and beta must be nonnegative")
        if self.alpha + self.beta > 1 + ATOL:
            raise ValueError(
                f"alpha + beta = {self.alpha + self.beta} exceeds 1 (outside slice)"
            )
        vertex(self.r_ns)  # reject unknown tags early


def nl_vertex(mu: int, nu: int, sigma: int) -> Box222:
    """Extremal non-local box: P = 1/2 iff a xor b = xy + mu*x + nu*y + sigma."""
    _check_bits(mu=mu, nu=nu, sigma=sigma)
    probs = np.zeros((2, 2, 2, 2))
    for a in (0, 1):
        for b in (0, 1):
            for x in (0, 1):
                for y in (0, 1):
                    if a ^ b == (x & y) ^ (mu & x) ^ (nu & y) ^ sigma:
                        probs[a, b, x, y] = 0.5
    return Box222(probs)


def local_vertex(mu: int, nu: int, sigma: int, tau: int) -> Box222:
    """Local deterministic box with a = mu*x + nu and b = sigma*y + tau."""
    _check_bits(mu=mu, nu=nu, sigma=sigma, tau=tau)
    probs = np.zeros((2, 2, 2, 2))
    for x in (0, 1):
        for y in (0, 1):
            probs[(mu & x) ^ nu, (sigma & y) ^ tau, x, y] = 1.0
    return Box222(probs)


def uniform_box() -> Box222:
    """White noise: every outcome pair has probability 1/4."""
    return Box222(np.full((2, 2, 2, 2), 0.25))


def vertex(tag: str) -> Box222:
    """Build a polytope vertex from a tag like ``NL010`` or ``L0000``."""
    if tag.startswith("NL") and len(tag) == 5:
        bits = [int(c) for c in tag[2:]]
        return nl_vertex(*bits)
    if tag.startswith("L") and len(tag) == 5:
        bits = [int(c) for c in tag[1:]]
        return local_vertex(*bits)
    raise ValueError(f"unknown vertex tag {tag!r}")


def mix_slice(spec: SliceSpec) -> Box222:
    """Convex combination alpha*PR + beta*R_NS + (1-alpha-beta)*noise."""
    r = vertex(spec.r_ns)
    weight_noise = 1.0 - spec.alpha - spec.beta
    probs = (
        spec.alpha * nl_vertex(0, 0, 0).probs
        + spec.beta * r.probs
        + weight_noise * 0.25
    )
    return Box222(probs)


def correlator(box: Box222, x: int, y: int) -> float:
    """C_xy = P(a=b|xy) - P(a!=b|xy)."""
    _check_bits(x=x, y=y)
    p = box.probs
    return float(p[0, 0, x, y] + p[1, 1, x, y] - p[0, 1, x, y] - p[1, 0, x, y])


def chsh(box: Box222) -> float:
    """CHSH value C00 + C01 + C10 - C11."""
    return (
        correlator(box, 0, 0)
        + correlator(box, 0, 1)
        + correlator(box, 1, 0)
        - correlator(box, 1, 1)
    )


@dataclass(frozen=True)
class BoxCheck:
    name: str
    ok: bool
    deviation: float


@dataclass(frozen=True)
class BoxReport:
    checks: tuple[BoxCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> tuple[BoxCheck, ...]:
        return tuple(c for c in self.checks if not c.ok)


def validate(box: Box222, atol: float = ATOL) -> BoxReport:
    """Check nonnegativity, normalization and no-signaling of a box table.

    Returns a report with the worst deviation per invariant; never raises.
    """
    p = box.probs
    neg = max(0.0, float(-p.min()))
    norm = float(np.abs(p.sum(axis=(0, 1)) - 1.0).max())
    alice = p.sum(axis=1)  # P(a|xy) marginal, must not depend on y
    bob = p.sum(axis=0)  # P(b|xy) marginal, must not depend on x
    ns_a = float(np.abs(alice[:, :, 0] - alice[:, :, 1]).max())
    ns_b = float(np.abs(bob[:, 0, :] - bob[:, 1, :]).max())
    checks = (
        BoxCheck("nonnegativity", neg <= atol, neg),
        BoxCheck("normalization", norm <= atol, norm),
        BoxCheck("no-signaling", max(ns_a, ns_b) <= atol, max(ns_a, ns_b)),
    )
    return BoxReport(checks)
