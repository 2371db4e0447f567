"""Metric distances between multisets and sequences over an arbitrary ground metric."""

from msdist.assignment import (
    AssignmentResult,
    build_cost_matrix_all,
    build_cost_matrix_complete,
    solve_assignment,
)
from msdist.embed import Embedding, classical_mds, procrustes_align
from msdist.ground import (
    GroundMetric,
    MetricAuditReport,
    abs_metric,
    audit_metric,
    discrete_metric,
    lcs_ground,
    lift_to_ground,
    lsp_ground,
    steinhaus_transform,
)
from msdist.kernels import BACKEND
from msdist.multiset import Multiset
from msdist.seqdist import (
    dtw_distance,
    edit_distance,
    fixed_penalty_dtw_distance,
    fixed_penalty_edit_distance,
    lcs_distance,
    lsp_distance,
)
from msdist.setdist import (
    Matching,
    PenaltySpec,
    emd,
    fixed_penalty_matching_distance,
    matching_cost,
    matching_distance,
    semd,
)
from msdist.transport import DiscreteDistribution, TransportPlan, solve_transport, to_distribution

__version__ = "0.1.0"
