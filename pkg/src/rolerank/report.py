"""Rendering of ranking and sweep results: TSV, wire-format dicts, figures.

TSV ranking rows are headerless with fixed columns: rank, role, probability
(6 decimals), dp, dr, then one column per enabled extended criterion in
query order. Exact-match output is marked with a leading ``# exact-match``
comment line. Wire dicts use the camelCase field names of the HTTP API.
"""

from __future__ import annotations

from pathlib import Path

from .ranking import (
    EXTENDED_CRITERIA,
    MODE_EXACT_MATCH,
    AuthorizationQuery,
    RankingResult,
    RoleScore,
    SweepResult,
)


def format_probability(value: float) -> str:
    return f"{value:.6f}"


def _format_extended(value: float) -> str:
    if float(value).is_integer():
        return str(int(value))
    return f"{value:.6f}"


def enabled_extended(query: AuthorizationQuery) -> list[str]:
    return [spec.id for spec in query.criteria if spec.id in EXTENDED_CRITERIA]


def render_ranking_tsv(result: RankingResult) -> str:
    """Delimited ranking rows; byte-stable for identical inputs."""
    extended = enabled_extended(result.parameters)
    lines: list[str] = []
    if result.mode == MODE_EXACT_MATCH:
        lines.append("# exact-match")
    for position, score in enumerate(result.scores, start=1):
        cells = [
            str(position),
            score.role,
            format_probability(score.probability),
            str(score.dp),
            str(score.dr),
        ]
        cells.extend(
            _format_extended(score.extended[crit]) if crit in score.extended else ""
            for crit in extended
        )
        lines.append("\t".join(cells))
    return "\n".join(lines) + "\n"


def render_sweep_tsv(sweep: SweepResult) -> str:
    """Long-format sweep rows (s, rank, role, probability, dp, dr) plus change-point comments."""
    lines: list[str] = []
    for s, ranking in zip(sweep.grid, sweep.rankings):
        for position, score in enumerate(ranking.scores, start=1):
            lines.append(
                "\t".join(
                    [
                        f"{s:.6f}",
                        str(position),
                        score.role,
                        format_probability(score.probability),
                        str(score.dp),
                        str(score.dr),
                    ]
                )
            )
    for change in sweep.change_points:
        lines.append(
            f"# change-point\t{change.s_low:.6f}\t{change.s_high:.6f}"
            f"\t{','.join(change.before)}\t{','.join(change.after)}"
        )
    return "\n".join(lines) + "\n"


# -- wire-format dicts -----------------------------------------------------


def query_to_dict(query: AuthorizationQuery) -> dict:
    return {
        "required": sorted(query.required),
        "s": query.s,
        "criteria": [
            {
                "id": spec.id,
                "orientation": spec.orientation.value,
                "firstRowPreference": spec.first_row_preference,
            }
            for spec in query.criteria
        ],
        "alpha": query.alpha,
        "lambda": query.lambda_,
    }


def role_score_to_dict(score: RoleScore) -> dict:
    return {
        "role": score.role,
        "dp": score.dp,
        "dr": score.dr,
        "extended": dict(score.extended),
        "perCriterionWeight": dict(score.per_criterion_weight),
        "probability": score.probability,
    }


def ranking_to_dict(result: RankingResult) -> dict:
    return {
        "mode": result.mode,
        "scores": [role_score_to_dict(score) for score in result.scores],
        "selected": result.selected,
        "parameters": query_to_dict(result.parameters),
    }


def sweep_to_dict(sweep: SweepResult) -> dict:
    return {
        "grid": list(sweep.grid),
        "rankings": [ranking_to_dict(r) for r in sweep.rankings],
        "changePoints": [
            {
                "sLow": change.s_low,
                "sHigh": change.s_high,
                "before": list(change.before),
                "after": list(change.after),
            }
            for change in sweep.change_points
        ],
    }


# -- figures ---------------------------------------------------------------


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def save_ranking_figure(result: RankingResult, path: str | Path) -> Path:
    """Horizontal bar chart of selection probabilities, best candidate on top."""
    plt = _pyplot()
    roles = [score.role for score in result.scores]
    probabilities = [score.probability for score in result.scores]
    fig, ax = plt.subplots(figsize=(6.4, 0.6 + 0.45 * max(len(roles), 2)))
    bars = ax.barh(range(len(roles)), probabilities, color="#3b6ea5")
    ax.set_yticks(range(len(roles)), roles)
    ax.invert_yaxis()
    ax.set_xlim(0.0, 1.0)
    ax.set_xlabel("selection probability")
    for bar, probability in zip(bars, probabilities):
        ax.text(
            min(probability + 0.01, 0.98),
            bar.get_y() + bar.get_height() / 2,
            format_probability(probability),
            va="center",
            fontsize=8,
        )
    if result.mode == MODE_EXACT_MATCH:
        ax.set_title(f"exact fit: {result.selected}")
    else:
        ax.set_title(f"recommended: {result.selected}")
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_sweep_figure(sweep: SweepResult, path: str | Path) -> Path:
    """Per-role probability curves over the s grid; change intervals as dashed rules."""
    plt = _pyplot()
    roles: list[str] = []
    for ranking in sweep.rankings:
        for score in ranking.scores:
            if score.role not in roles:
                roles.append(score.role)
    fig, ax = plt.subplots(figsize=(7.2, 4.2))
    for role in sorted(roles):
        ys = []
        for ranking in sweep.rankings:
            by_role = {score.role: score.probability for score in ranking.scores}
            ys.append(by_role.get(role))
        ax.plot(sweep.grid, ys, marker="o", markersize=3, label=role)
    for change in sweep.change_points:
        midpoint = (change.s_low * change.s_high) ** 0.5
        ax.axvline(midpoint, color="#777777", linestyle="--", linewidth=1)
    ax.set_xscale("log")
    ax.set_xlabel("danger ratio s")
    ax.set_ylabel("selection probability")
    ax.legend(loc="best", fontsize=8)
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
