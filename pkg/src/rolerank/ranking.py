"""Candidate-role ranking: leakage measures, criteria weighting, sweeps.

Ranking a request runs in seven steps: collect candidate roles, count each
candidate's additional permissions (dp) with an exact-fit short circuit,
count its dominated roles (dr), derive per-criterion priority weights from
those counts, weight the criteria themselves from the danger ratio ``s``,
combine into selection probabilities, and order the candidates by
non-increasing probability with a deterministic tie-break.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .ahp import (
    CriterionSpec,
    Orientation,
    ScoreVector,
    WeightVector,
    combine,
    criteria_weights,
    weights_from_scores,
)
from .errors import (
    CandidateNotSupersetError,
    InvalidParameterError,
    UnknownCriterionError,
)
from .hierarchy import PermissionRequest, RoleGraph

CRITERION_ADDITIONAL_PERMISSIONS = "additional-permissions"
CRITERION_SUBORDINATE_ROLES = "subordinate-roles"
CRITERION_AVAILABILITY = "availability"
CRITERION_INTEGRITY = "integrity"
CRITERION_MANAGER_COST = "manager-cost"

EXTENDED_CRITERIA = (
    CRITERION_AVAILABILITY,
    CRITERION_INTEGRITY,
    CRITERION_MANAGER_COST,
)

CRITERION_ORIENTATIONS: Mapping[str, Orientation] = {
    CRITERION_ADDITIONAL_PERMISSIONS: Orientation.COST,
    CRITERION_SUBORDINATE_ROLES: Orientation.COST,
    CRITERION_AVAILABILITY: Orientation.BENEFIT,
    CRITERION_INTEGRITY: Orientation.COST,
    CRITERION_MANAGER_COST: Orientation.COST,
}

MODE_RANKED = "ranked"
MODE_EXACT_MATCH = "exact-match"

# Probabilities are quantized at this precision when ordering so float noise
# cannot break mathematically exact ties before the tie-break chain runs.
_TIE_DECIMALS = 12


def base_criteria(s: float) -> tuple[CriterionSpec, CriterionSpec]:
    """The two confidentiality criteria; the danger ratio enters as t2 = 1/s."""
    return (
        CriterionSpec(CRITERION_ADDITIONAL_PERMISSIONS, Orientation.COST, 1.0),
        CriterionSpec(CRITERION_SUBORDINATE_ROLES, Orientation.COST, 1.0 / s),
    )


@dataclass(frozen=True)
class AuthorizationQuery:
    """A permission request plus every tunable of the ranking.

    ``criteria`` always starts with the two base criteria; the
    subordinate-roles preference is rewritten to 1/s on construction so the
    danger ratio stays authoritative even through ``dataclasses.replace``.
    """

    required: frozenset[str]
    s: float = 1.0
    criteria: tuple[CriterionSpec, ...] = ()
    alpha: float = 1.0
    lambda_: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "required", frozenset(self.required))
        if not self.required:
            raise InvalidParameterError("query must request at least one permission")
        if not self.s > 0:
            raise InvalidParameterError(f"danger ratio s must be > 0, got {self.s}")
        if not self.lambda_ > 0:
            raise InvalidParameterError(f"lambda must be > 0, got {self.lambda_}")
        if self.alpha < 0:
            raise InvalidParameterError(f"alpha must be >= 0, got {self.alpha}")
        specs = tuple(self.criteria) or base_criteria(self.s)
        if (
            len(specs) < 2
            or specs[0].id != CRITERION_ADDITIONAL_PERMISSIONS
            or specs[1].id != CRITERION_SUBORDINATE_ROLES
        ):
            raise InvalidParameterError(
                "criteria must start with the additional-permissions and subordinate-roles pair"
            )
        seen: set[str] = set()
        for spec in specs:
            if spec.id not in CRITERION_ORIENTATIONS:
                raise UnknownCriterionError(f"unknown criterion {spec.id!r}")
            if spec.id in seen:
                raise InvalidParameterError(f"criterion {spec.id!r} listed twice")
            seen.add(spec.id)
        normalized = (
            dataclasses.replace(specs[0], first_row_preference=1.0),
            dataclasses.replace(specs[1], first_row_preference=1.0 / self.s),
        ) + specs[2:]
        object.__setattr__(self, "criteria", normalized)


def make_query(
    required: Iterable[str],
    *,
    s: float = 1.0,
    extended: Iterable[str | tuple[str, float]] = (),
    alpha: float = 1.0,
    lambda_: float = 1.0,
) -> AuthorizationQuery:
    """Build a query from extended-criterion ids, optionally with preferences."""
    specs = list(base_criteria(s))
    for item in extended:
        crit_id, preference = item if isinstance(item, tuple) else (item, 1.0)
        if crit_id not in EXTENDED_CRITERIA:
            raise UnknownCriterionError(f"unknown extended criterion {crit_id!r}")
        specs.append(CriterionSpec(crit_id, CRITERION_ORIENTATIONS[crit_id], preference))
    return AuthorizationQuery(
        required=frozenset(required), s=s, criteria=tuple(specs), alpha=alpha, lambda_=lambda_
    )


@dataclass(frozen=True)
class RoleScore:
    """One candidate's measurements and its combined selection probability."""

    role: str
    dp: int
    dr: int
    extended: Mapping[str, float]
    per_criterion_weight: Mapping[str, float]
    probability: float


@dataclass(frozen=True)
class RankingResult:
    """Ranked candidates, best first, plus the parameters that produced them."""

    mode: str
    scores: tuple[RoleScore, ...]
    selected: str
    parameters: AuthorizationQuery

    def ordering(self) -> tuple[str, ...]:
        return tuple(score.role for score in self.scores)


@dataclass(frozen=True)
class ChangePoint:
    """Adjacent sweep grid pair across which the full ordering changed."""

    s_low: float
    s_high: float
    before: tuple[str, ...]
    after: tuple[str, ...]


@dataclass(frozen=True)
class SweepResult:
    """One ranking per grid point plus the ordering change points."""

    grid: tuple[float, ...]
    rankings: tuple[RankingResult, ...]
    change_points: tuple[ChangePoint, ...]


def compute_dp(graph: RoleGraph, candidates: Sequence[str], request: PermissionRequest) -> list[int]:
    """Additional-permission counts: dp_i = |effective(r_i)| - |PU|."""
    wanted = graph.request_bits(request)
    size = len(request.required)
    counts = []
    for role in candidates:
        if not graph.covers(role, wanted):
            raise CandidateNotSupersetError(
                f"role {role!r} does not cover the request it was selected for"
            )
        counts.append(graph.effective_size(role) - size)
    return counts


def compute_dr(graph: RoleGraph, candidates: Sequence[str]) -> list[int]:
    """Dominated-role counts including the role itself, so every value is >= 1."""
    return [graph.dominated_count(role) for role in candidates]


def extended_scores(
    graph: RoleGraph,
    candidates: Sequence[str],
    criterion_id: str,
    *,
    alpha: float = 1.0,
    lambda_: float = 1.0,
) -> ScoreVector:
    """Raw values for one extended criterion.

    availability: total effective permission count (benefit).
    integrity: dangerous effective permissions + 1, offset so zero exposure
    stays finite under inversion (cost).
    manager-cost: (dm_i + 1)^alpha * lambda^alpha (cost).
    """
    if criterion_id == CRITERION_AVAILABILITY:
        values = [graph.effective_size(role) for role in candidates]
    elif criterion_id == CRITERION_INTEGRITY:
        values = [graph.danger_permission_count(role) + 1 for role in candidates]
    elif criterion_id == CRITERION_MANAGER_COST:
        values = [
            float((graph.direct_subordinates_count(role) + 1) ** alpha * lambda_**alpha)
            for role in candidates
        ]
    else:
        raise UnknownCriterionError(f"unknown extended criterion {criterion_id!r}")
    return ScoreVector(values)


def _criterion_scores(
    graph: RoleGraph,
    candidates: Sequence[str],
    spec: CriterionSpec,
    dp: Sequence[int],
    dr: Sequence[int],
    query: AuthorizationQuery,
) -> ScoreVector:
    if spec.id == CRITERION_ADDITIONAL_PERMISSIONS:
        return ScoreVector(dp)
    if spec.id == CRITERION_SUBORDINATE_ROLES:
        return ScoreVector(dr)
    return extended_scores(
        graph, candidates, spec.id, alpha=query.alpha, lambda_=query.lambda_
    )


def rank_roles(graph: RoleGraph, query: AuthorizationQuery) -> RankingResult:
    """Rank every candidate role for the query; exact fits short-circuit the weighting."""
    request = PermissionRequest(query.required)
    candidates = graph.candidate_roles(request)
    dp = compute_dp(graph, candidates, request)

    if 0 in dp:
        exact = [candidates[i] for i, extra in enumerate(dp) if extra == 0]
        exact_dr = compute_dr(graph, exact)
        dr_sel, selected = min(zip(exact_dr, exact))
        score = RoleScore(
            role=selected,
            dp=0,
            dr=dr_sel,
            extended={},
            per_criterion_weight={},
            probability=1.0,
        )
        return RankingResult(MODE_EXACT_MATCH, (score,), selected, query)

    dr = compute_dr(graph, candidates)
    raw_extended: dict[str, list[float]] = {}
    alternative_weights: list[WeightVector] = []
    for spec in query.criteria:
        scores = _criterion_scores(graph, candidates, spec, dp, dr, query)
        if spec.id in EXTENDED_CRITERIA:
            raw_extended[spec.id] = list(scores.values)
        alternative_weights.append(weights_from_scores(scores, spec.orientation))

    crit_weights = criteria_weights(query.criteria)
    probabilities = combine(crit_weights, alternative_weights).weights

    order = sorted(
        range(len(candidates)),
        key=lambda i: (-round(float(probabilities[i]), _TIE_DECIMALS), dp[i], dr[i], candidates[i]),
    )
    scores = tuple(
        RoleScore(
            role=candidates[i],
            dp=dp[i],
            dr=dr[i],
            extended={
                crit_id: values[i] for crit_id, values in raw_extended.items()
            },
            per_criterion_weight={
                spec.id: float(vec.weights[i])
                for spec, vec in zip(query.criteria, alternative_weights)
            },
            probability=float(probabilities[i]),
        )
        for i in order
    )
    return RankingResult(MODE_RANKED, scores, scores[0].role, query)


def authorize(graph: RoleGraph, query: AuthorizationQuery) -> str:
    """The single role the ranking recommends for authorization."""
    return rank_roles(graph, query).selected


def geometric_grid(s_min: float, s_max: float, steps: int) -> tuple[float, ...]:
    """Log-spaced grid over [s_min, s_max]; s is a ratio, so spacing is multiplicative."""
    if steps < 2:
        raise InvalidParameterError(f"grid needs at least 2 steps, got {steps}")
    if not s_min > 0:
        raise InvalidParameterError(f"grid lower bound must be > 0, got {s_min}")
    if not s_min < s_max:
        raise InvalidParameterError(f"grid bounds must satisfy s_min < s_max, got [{s_min}, {s_max}]")
    ratio = (s_max / s_min) ** (1.0 / (steps - 1))
    points = [s_min * ratio**i for i in range(steps)]
    points[-1] = s_max
    if any(b <= a for a, b in zip(points, points[1:])):
        raise InvalidParameterError("grid bounds are too close together to space distinctly")
    return tuple(points)


def sensitivity_sweep(
    graph: RoleGraph, query: AuthorizationQuery, s_grid: Sequence[float]
) -> SweepResult:
    """Re-rank the query at every grid value of s and note where orderings flip."""
    grid = tuple(float(s) for s in s_grid)
    if not grid:
        raise InvalidParameterError("sweep grid must not be empty")
    if any(not s > 0 for s in grid):
        raise InvalidParameterError("sweep grid values must be > 0")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise InvalidParameterError("sweep grid must be strictly increasing")

    rankings = tuple(rank_roles(graph, dataclasses.replace(query, s=s)) for s in grid)
    change_points = tuple(
        ChangePoint(grid[i], grid[i + 1], rankings[i].ordering(), rankings[i + 1].ordering())
        for i in range(len(grid) - 1)
        if rankings[i].ordering() != rankings[i + 1].ordering()
    )
    return SweepResult(grid, rankings, change_points)
