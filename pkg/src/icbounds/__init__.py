"""Information-causality quantifiers for 2-2-2 no-signaling boxes.

Implements the random-access-code quantifier IC_RAC and the
redundancy-based quantifier IC_red (Harder-Salge-Polani redundant
information), together with the compact one-box protocol that turns a
no-signaling box plus a noisy bit channel into the pair of joint
distributions the quantifiers act on, and sweeps that trace the
IC-violation boundary across three slices of the no-signaling polytope.
"""

__version__ = "0.1.0"

from .boxes import (
    SLICE_VERTEX,
    Box222,
    SliceSpec,
    chsh,
    correlator,
    local_vertex,
    mix_slice,
    nl_vertex,
    uniform_box,
    validate,
    vertex,
)
from .infotheory import (
    channel_capacity,
    entropy,
    kl_divergence,
    mutual_information,
    three_way_mi,
)
from .protocol import (
    ProtocolPoint,
    SlicePoint,
    k_pm,
    marginal_bit_joint,
    simulate_joints,
    table1_joints,
)
from .redundancy import (
    ConditionalFamily,
    ProjectionResult,
    conditionals,
    ic_rac,
    ic_red,
    kl_project,
    markov_coupling,
    projected_information,
    redundant_information,
)
from .sweep import (
    BoundaryCurve,
    BoundaryResult,
    CurveRow,
    SweepConfig,
    boundary_alpha,
    quantum_boundary,
    run_sweep,
)
