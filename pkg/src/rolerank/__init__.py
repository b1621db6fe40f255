"""Decision support for RBAC authorization.

Given a role hierarchy and a requested permission set, rank every role that
could serve the request by an analytic-hierarchy-process score built from
quantitative leakage measures, so the administrator can authorize the user
with minimal exposure. The HTTP facade lives in :mod:`rolerank.service` and
the command line in :mod:`rolerank.cli`; both stay off this module's import
path to keep the core light.
"""

from .ahp import (
    CriterionSpec,
    Orientation,
    PairwiseMatrix,
    ScoreVector,
    WeightVector,
    combine,
    consistency_index,
    criteria_weights,
    ideal_consistency_check,
    matrix_from_scores,
    normalize_weights,
    weights_from_scores,
)
from .errors import (
    CandidateNotSupersetError,
    CycleError,
    DimensionMismatchError,
    DuplicateDeclarationError,
    EmptyScoresError,
    HierarchyError,
    HierarchySyntaxError,
    InvalidParameterError,
    NoCandidateError,
    NoConvergenceError,
    NonPositivePreferenceError,
    RoleRankError,
    UnknownCriterionError,
    UnknownPermissionError,
    UnknownReferenceError,
    UnknownRoleError,
)
from .hierarchy import (
    Issue,
    PermissionRequest,
    RoleGraph,
    ValidationReport,
    parse_hierarchy,
    serialize_hierarchy,
    validate,
)
from .ranking import (
    CRITERION_ADDITIONAL_PERMISSIONS,
    CRITERION_AVAILABILITY,
    CRITERION_INTEGRITY,
    CRITERION_MANAGER_COST,
    CRITERION_SUBORDINATE_ROLES,
    EXTENDED_CRITERIA,
    MODE_EXACT_MATCH,
    MODE_RANKED,
    AuthorizationQuery,
    ChangePoint,
    RankingResult,
    RoleScore,
    SweepResult,
    authorize,
    base_criteria,
    compute_dp,
    compute_dr,
    extended_scores,
    geometric_grid,
    make_query,
    rank_roles,
    sensitivity_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "AuthorizationQuery",
    "CandidateNotSupersetError",
    "ChangePoint",
    "CriterionSpec",
    "CycleError",
    "DimensionMismatchError",
    "DuplicateDeclarationError",
    "EmptyScoresError",
    "HierarchyError",
    "HierarchySyntaxError",
    "InvalidParameterError",
    "Issue",
    "NoCandidateError",
    "NoConvergenceError",
    "NonPositivePreferenceError",
    "Orientation",
    "PairwiseMatrix",
    "PermissionRequest",
    "RankingResult",
    "RoleGraph",
    "RoleRankError",
    "RoleScore",
    "ScoreVector",
    "SweepResult",
    "UnknownCriterionError",
    "UnknownPermissionError",
    "UnknownReferenceError",
    "UnknownRoleError",
    "ValidationReport",
    "WeightVector",
    "CRITERION_ADDITIONAL_PERMISSIONS",
    "CRITERION_AVAILABILITY",
    "CRITERION_INTEGRITY",
    "CRITERION_MANAGER_COST",
    "CRITERION_SUBORDINATE_ROLES",
    "EXTENDED_CRITERIA",
    "MODE_EXACT_MATCH",
    "MODE_RANKED",
    "authorize",
    "base_criteria",
    "combine",
    "compute_dp",
    "compute_dr",
    "consistency_index",
    "criteria_weights",
    "extended_scores",
    "geometric_grid",
    "ideal_consistency_check",
    "make_query",
    "matrix_from_scores",
    "normalize_weights",
    "parse_hierarchy",
    "rank_roles",
    "sensitivity_sweep",
    "serialize_hierarchy",
    "validate",
    "weights_from_scores",
]
