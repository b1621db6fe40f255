"""Pairwise-comparison machinery: ratio matrices, priority weights, consistency.

Matrices built from a positive score vector are ratio matrices
(``M[i][j] = v_j / v_i`` for cost scores), which makes them multiplicatively
transitive, so every normalized column already equals the priority vector.
Production code therefore uses the closed forms in :func:`weights_from_scores`
and :func:`criteria_weights`; full matrices exist for the consistency
utilities and as an independent route in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DimensionMismatchError,
    EmptyScoresError,
    NoConvergenceError,
    NonPositivePreferenceError,
)

RECIPROCAL_RTOL = 1e-12


class Orientation(str, Enum):
    """Whether a small raw value is good (cost) or a large one is (benefit)."""

    COST = "cost"
    BENEFIT = "benefit"


def _freeze(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class ScoreVector:
    """Raw per-alternative quantities; strictly positive by contract."""

    values: np.ndarray

    def __init__(self, values: Iterable[float] | np.ndarray):
        arr = np.asarray(list(values) if not isinstance(values, np.ndarray) else values, dtype=float)
        if arr.ndim != 1 or arr.size == 0:
            raise EmptyScoresError("score vector must be one-dimensional and non-empty")
        if not np.all(arr > 0):
            raise ValueError("score values must be strictly positive; offset zeros before scoring")
        object.__setattr__(self, "values", _freeze(arr))

    def __len__(self) -> int:
        return self.values.size


@dataclass(frozen=True)
class PairwiseMatrix:
    """Positive reciprocal comparison matrix with unit diagonal."""

    entries: np.ndarray

    def __init__(self, entries: Sequence[Sequence[float]] | np.ndarray):
        arr = np.asarray(entries, dtype=float)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise ValueError("comparison matrix must be square and non-empty")
        if not np.all(arr > 0):
            raise ValueError("comparison matrix entries must be strictly positive")
        if not np.all(np.diag(arr) == 1.0):
            raise ValueError("comparison matrix diagonal must be exactly 1")
        if not np.allclose(arr * arr.T, 1.0, rtol=RECIPROCAL_RTOL, atol=0.0):
            raise ValueError("comparison matrix must be reciprocal: M[i][j] * M[j][i] == 1")
        object.__setattr__(self, "entries", _freeze(arr))

    @property
    def k(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class WeightVector:
    """Normalized priority weights: non-negative, summing to one."""

    weights: np.ndarray

    def __init__(self, weights: Iterable[float] | np.ndarray):
        arr = np.asarray(
            list(weights) if not isinstance(weights, np.ndarray) else weights, dtype=float
        )
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("weight vector must be one-dimensional and non-empty")
        if not np.all(arr >= 0):
            raise ValueError("weights must be non-negative")
        if abs(arr.sum() - 1.0) > 1e-12:
            raise ValueError(f"weights must sum to 1, got {arr.sum()!r}")
        object.__setattr__(self, "weights", _freeze(arr))

    def __len__(self) -> int:
        return self.weights.size

    def __getitem__(self, index: int) -> float:
        return float(self.weights[index])


@dataclass(frozen=True)
class CriterionSpec:
    """One selection criterion and its first-row preference entry.

    ``first_row_preference`` is the expert entry t_j comparing criterion 1
    against criterion j; the first criterion always carries t = 1.
    """

    id: str
    orientation: Orientation
    first_row_preference: float = 1.0

    def __post_init__(self):
        if not self.first_row_preference > 0:
            raise NonPositivePreferenceError(
                f"criterion {self.id!r} preference must be > 0, got {self.first_row_preference}"
            )


def matrix_from_scores(scores: ScoreVector, orientation: Orientation) -> PairwiseMatrix:
    """Ratio matrix of a score vector.

    Cost scores compare by inverse value, M[i][j] = v_j / v_i; benefit scores
    compare directly, M[i][j] = v_i / v_j.
    """
    v = scores.values
    if orientation is Orientation.COST:
        entries = v[None, :] / v[:, None]
    else:
        entries = v[:, None] / v[None, :]
    return PairwiseMatrix(entries)


def normalize_weights(matrix: PairwiseMatrix) -> WeightVector:
    """Column-normalize the matrix, then average each row: w_i = mean_j M*[i][j]."""
    m = matrix.entries
    normalized = m / m.sum(axis=0)
    return WeightVector(normalized.mean(axis=1))


def weights_from_scores(scores: ScoreVector, orientation: Orientation) -> WeightVector:
    """Closed-form priority weights, skipping matrix construction entirely.

    Cost: w_i = (1/v_i) / sum_s (1/v_s). Benefit: w_i = v_i / sum_s v_s.
    Equals ``normalize_weights(matrix_from_scores(...))`` within 1e-12.
    """
    v = scores.values
    if orientation is Orientation.COST:
        inv = 1.0 / v
        return WeightVector(inv / inv.sum())
    return WeightVector(v / v.sum())


def criteria_weights(specs: Sequence[CriterionSpec]) -> WeightVector:
    """Criteria-level weights from first-row preferences: w_i = (1/t_i) / sum_s (1/t_s)."""
    if not specs:
        raise EmptyScoresError("at least one criterion is required")
    if specs[0].first_row_preference != 1.0:
        raise NonPositivePreferenceError(
            "the first criterion's preference is fixed at 1 by convention"
        )
    t = np.array([spec.first_row_preference for spec in specs], dtype=float)
    inv = 1.0 / t
    return WeightVector(inv / inv.sum())


def ideal_consistency_check(matrix: PairwiseMatrix, tol: float = 1e-9) -> bool:
    """True iff M[i][j] == M[i][s] * M[s][j] for every triple, within tol relative."""
    m = matrix.entries
    for s in range(matrix.k):
        products = np.outer(m[:, s], m[s, :])
        if not np.all(np.abs(products - m) <= tol * m):
            return False
    return True


def consistency_index(matrix: PairwiseMatrix, *, tol: float = 1e-10, max_iter: int = 10000) -> float:
    """CI = (lambda_max - k) / (k - 1) with lambda_max from power iteration.

    Zero (within 1e-9) for ideally consistent matrices; strictly positive
    otherwise. Diagnostic only: no accept/reject threshold is applied.
    """
    if matrix.k < 2:
        raise ValueError("consistency index requires a matrix of dimension >= 2")
    m = matrix.entries
    x = np.full(matrix.k, 1.0 / matrix.k)
    lam_prev = float("inf")
    for _ in range(max_iter):
        y = m @ x
        total = y.sum()
        lam = float(total)  # x is normalized to sum 1, so sum(Mx) estimates lambda_max
        x = y / total
        if abs(lam - lam_prev) <= tol:
            return (lam - matrix.k) / (matrix.k - 1)
        lam_prev = lam
    raise NoConvergenceError(f"eigenvalue did not settle within {max_iter} iterations")


def combine(criteria: WeightVector, alternatives: Sequence[WeightVector]) -> WeightVector:
    """Combined scores: score_i = sum_c w_c * w_ci; a convex mix of unit-sum vectors."""
    if len(alternatives) != len(criteria):
        raise DimensionMismatchError(
            f"{len(criteria)} criteria weights but {len(alternatives)} alternative vectors"
        )
    sizes = {len(a) for a in alternatives}
    if len(sizes) != 1:
        raise DimensionMismatchError(f"alternative vectors differ in size: {sorted(sizes)}")
    stacked = np.stack([a.weights for a in alternatives])
    return WeightVector(criteria.weights @ stacked)
