"""Exact Shannon information measures over small finite alphabets, in bits.

All distributions here are closed-form tables, never sample estimates.
Values in [-1e-15, 0) are treated as floating-point dust from convex
mixtures and clamped to zero before taking logs; anything more negative
is a genuine validity error.
"""

from __future__ import annotations

import math

import numpy as np

NORM_ATOL = 1e-12
NEG_FLOOR = -1e-15


def _clean(p) -> np.ndarray:
    arr = np.asarray(p, dtype=float)
    if arr.min(initial=0.0) < NEG_FLOOR:
        raise ValueError(f"negative probability {arr.min()} below the dust floor")
    return np.where(arr < 0.0, 0.0, arr)


def _check_normalized(arr: np.ndarray):
    total = float(arr.sum())
    if abs(total - 1.0) > NORM_ATOL:
        raise ValueError(f"distribution sums to {total}, not 1")


def entropy(p) -> float:
    """Shannon entropy -sum p log2 p with the 0*log0 = 0 convention."""
    arr = _clean(p)
    _check_normalized(arr)
    return max(0.0, float(-sum(v * math.log2(v) for v in arr.flat if v > 0.0)))


def mutual_information(joint) -> float:
    """I(X;Y) of a 2-D joint table, zero-probability cells contributing 0."""
    t = _clean(joint)
    if t.ndim != 2:
        raise ValueError("mutual_information expects a 2-D joint table")
    _check_normalized(t)
    px = t.sum(axis=1)
    py = t.sum(axis=0)
    s = 0.0
    for i in range(t.shape[0]):
        for j in range(t.shape[1]):
            v = t[i, j]
            if v > 0.0:
                s += v * math.log2(v / (px[i] * py[j]))
    return max(s, 0.0)


def kl_divergence(p, q) -> float:
    """D_KL(p||q) in bits; +inf when p puts mass outside q's support."""
    ap = _clean(p)
    aq = _clean(q)
    if ap.shape != aq.shape:
        raise ValueError("p and q must share an alphabet")
    _check_normalized(ap)
    _check_normalized(aq)
    s = 0.0
    for vp, vq in zip(ap.flat, aq.flat):
        if vp > 0.0:
            if vq <= 0.0:
                return math.inf
            s += vp * math.log2(vp / vq)
    return s


def channel_capacity(p_c: float) -> float:
    """Capacity 1 - h(p_c) of the binary symmetric channel, p_c in [1/2, 1]."""
    if not 0.5 <= p_c <= 1.0:
        raise ValueError(f"channel reliability p_c={p_c} outside [1/2, 1]")
    if p_c == 1.0:
        return 1.0
    return 1.0 + p_c * math.log2(p_c) + (1.0 - p_c) * math.log2(1.0 - p_c)


def three_way_mi(joint3) -> float:
    """I(A;(B1,B2)) treating the pair (b1,b2) as a single 4-valued variable."""
    t = _clean(joint3)
    if t.ndim != 3:
        raise ValueError("three_way_mi expects a 3-D joint table")
    return mutual_information(t.reshape(t.shape[0], -1))
