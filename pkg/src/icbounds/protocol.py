"""The compact one-box protocol and its closed-form joints on the slices.

Alice holds two uniform bits a = (a1, a2).  She inputs x = a1 xor a2
into the shared box, gets output fa, and sends m = fa xor a1 through a
binary symmetric channel of reliability p_c.  Bob, to estimate indicator
i, inputs y = i - 1, gets output fb, and announces b_i = fb xor m'.

Everything is enumerated exactly (the event space has a handful of
atoms), so the resulting joints p(a, b_i) are closed-form in the box
entries and p_c.  For the three canonical slices the same joints have a
two-parameter closed form (``table1_joints``) which serves as an
independent oracle for the simulation.

Alice's two-bit string is encoded as the index a = 2*a1 + a2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .boxes import SLICE_VERTEX, Box222, SliceSpec, mix_slice, validate


@dataclass(frozen=True)
class ProtocolPoint:
    """A box together with the channel reliability p_c in (1/2, 1]."""

    box: Box222
    p_c: float

    def __post_init__(self):
        if not 0.5 < self.p_c <= 1.0:
            raise ValueError(f"p_c={self.p_c} outside (1/2, 1]")
        report = validate(self.box)
        if not report.ok:
            raise ValueError(f"invalid box: {report.failures()}")


@dataclass(frozen=True)
class SlicePoint:
    """A slice coordinate (slice id, alpha, beta) plus channel reliability."""

    slice_id: str
    alpha: float
    beta: float
    p_c: float

    def __post_init__(self):
        if self.slice_id not in SLICE_VERTEX:
            raise ValueError(f"unknown slice {self.slice_id!r}")
        if self.alpha < 0 or self.beta < 0 or self.alpha + self.beta > 1 + 1e-12:
            raise ValueError(
                f"(alpha, beta)=({self.alpha}, {self.beta}) outside the slice simplex"
            )
        if not 0.5 < self.p_c <= 1.0:
            raise ValueError(f"p_c={self.p_c} outside (1/2, 1]")

    def spec(self) -> SliceSpec:
        return SliceSpec(SLICE_VERTEX[self.slice_id], self.alpha, self.beta)


def simulate_joints(pt: ProtocolPoint) -> tuple[np.ndarray, np.ndarray]:
    """Exact joints p(a, b_i) of the protocol, one (4, 2) table per indicator."""
    p = pt.box.probs
    pc = pt.p_c
    joints = []
    for i in (1, 2):
        y = i - 1
        j = np.zeros((4, 2))
        for a1 in (0, 1):
            for a2 in (0, 1):
                x = a1 ^ a2
                a = 2 * a1 + a2
                for fa in (0, 1):
                    m = fa ^ a1
                    for fb in (0, 1):
                        w = 0.25 * p[fa, fb, x, y]
                        if w == 0.0:
                            continue
                        j[a, fb ^ m] += w * pc
                        j[a, fb ^ m ^ 1] += w * (1.0 - pc)
        joints.append(j)
    return joints[0], joints[1]


def k_pm(alpha: float, beta: float, p_c: float) -> tuple[float, float]:
    """Channel-dressed slice reliabilities 1/2 + (p_c - 1/2)(alpha +- beta)."""
    eps = p_c - 0.5
    return 0.5 + eps * (alpha + beta), 0.5 + eps * (alpha - beta)


# p(b_i = 0 | a) per slice, rows in the order a = 00, 01, 10, 11.
def _columns(slice_id: str, kp: float, km: float):
    if slice_id == "slice1":
        return [kp, kp, 1 - kp, 1 - kp], [km, 1 - km, km, 1 - km]
    if slice_id == "slice2":
        return [kp, km, 1 - km, 1 - kp], [km, 1 - kp, kp, 1 - km]
    if slice_id == "slice3":
        return [kp, kp, 1 - kp, 1 - kp], [kp, 1 - km, km, 1 - kp]
    raise ValueError(f"unknown slice {slice_id!r}")


def table1_joints(pt: SlicePoint) -> tuple[np.ndarray, np.ndarray]:
    """Closed-form joints for the three slices; p(a, b) = p(b|a) / 4."""
    kp, km = k_pm(pt.alpha, pt.beta, pt.p_c)
    col1, col2 = _columns(pt.slice_id, kp, km)
    joints = []
    for col in (col1, col2):
        j = np.empty((4, 2))
        for a, pb0 in enumerate(col):
            j[a, 0] = pb0 / 4.0
            j[a, 1] = (1.0 - pb0) / 4.0
        joints.append(j)
    return joints[0], joints[1]


def slice_box(pt: SlicePoint) -> Box222:
    """The box the slice point denotes (for the simulation route)."""
    return mix_slice(pt.spec())


def marginal_bit_joint(j: np.ndarray, i: int) -> np.ndarray:
    """Sum out the unscored bit of a, leaving the 2x2 joint of (a_i, b)."""
    if i not in (1, 2):
        raise ValueError("bit index must be 1 or 2")
    t = np.asarray(j, dtype=float)
    out = np.zeros((2, 2))
    for a in range(4):
        bit = (a >> 1) & 1 if i == 1 else a & 1
        out[bit] += t[a]
    return out
