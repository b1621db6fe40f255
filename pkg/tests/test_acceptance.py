"""Acceptance suite: one test per release criterion, one PASS line each.

Run with ``pytest tests/test_acceptance.py -s`` to see the per-criterion
lines as they pass; tolerances are fixed here and nowhere else.
"""

import io
import random
import time

import numpy as np
import pytest

from rolerank import (
    CRITERION_MANAGER_COST,
    MODE_EXACT_MATCH,
    MODE_RANKED,
    CriterionSpec,
    Orientation,
    ScoreVector,
    consistency_index,
    criteria_weights,
    ideal_consistency_check,
    make_query,
    matrix_from_scores,
    parse_hierarchy,
    rank_roles,
    weights_from_scores,
)
from rolerank.cli import run as cli_run

from conftest import H1_TEXT
from graphgen import make_random_graph, oracle_rank, pick_satisfiable_request


def _report(name: str) -> None:
    print(f"[ACCEPTANCE] {name}: PASS")


def _invoke(argv):
    stdout, stderr = io.StringIO(), io.StringIO()
    code = cli_run(argv, stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


def synthetic_hierarchy(n: int) -> tuple[str, list[str]]:
    """Binary-tree hierarchy with one permission per role and a two-candidate request."""
    width = len(str(n - 1))
    roles = [f"r{i:0{width}d}" for i in range(n)]
    perms = [f"p{i:0{width}d}" for i in range(n)]
    lines = [f"permission {p}" for p in perms]
    lines += [f"role {r}" for r in roles]
    lines += [f"grant {roles[i]} {perms[i]}" for i in range(n)]
    lines += [f"dominates {roles[(i - 1) // 2]} {roles[i]}" for i in range(1, n)]

    subtree = []
    stack = [1]
    while stack:
        index = stack.pop()
        subtree.append(index)
        for child in (2 * index + 1, 2 * index + 2):
            if child < n:
                stack.append(child)
    # Everything under the root's left child except that child's own
    # permission, so no candidate fits exactly and the ranking path runs.
    required = [perms[i] for i in subtree if i != 1]
    return "\n".join(lines) + "\n", required


def test_h1_end_to_end():
    started = time.perf_counter()
    graph = parse_hierarchy(H1_TEXT)

    ranked = rank_roles(graph, make_query({"p1", "p2"}, s=2.0))
    by_role = {score.role: score.probability for score in ranked.scores}
    assert abs(by_role["r1"] - 4.0 / 9.0) <= 1e-9
    assert abs(by_role["r2"] - 5.0 / 9.0) <= 1e-9
    assert ranked.selected == "r2"

    tied = rank_roles(graph, make_query({"p1", "p2"}, s=1.0))
    assert [score.probability for score in tied.scores] == [0.5, 0.5]
    assert tied.selected == "r1"

    exact = rank_roles(graph, make_query({"p1", "p2", "p3", "p4"}))
    assert exact.mode == MODE_EXACT_MATCH
    assert exact.selected == "r2"

    assert time.perf_counter() - started < 1.0
    _report("H1 end-to-end walkthrough")


def test_consistency_suite():
    started = time.perf_counter()
    rng = np.random.default_rng(20260809)
    for _ in range(1000):
        k = int(rng.integers(2, 11))
        values = rng.uniform(1.0, 100.0, size=k)
        orientation = Orientation.COST if rng.integers(2) else Orientation.BENEFIT
        scores = ScoreVector(values)
        matrix = matrix_from_scores(scores, orientation)
        assert ideal_consistency_check(matrix, tol=1e-9)
        expected = weights_from_scores(scores, orientation).weights
        columns = matrix.entries / matrix.entries.sum(axis=0)
        assert np.all(np.abs(columns - expected[:, None]) <= 1e-12)
        assert consistency_index(matrix) <= 1e-9
    elapsed = time.perf_counter() - started
    assert elapsed < 10.0
    _report(f"consistency suite, 1000 score matrices in {elapsed:.2f}s")


def test_criteria_weight_formula():
    for s in (0.5, 1.0, 2.0, 5.0, 10.0):
        weights = criteria_weights(
            [
                CriterionSpec("additional-permissions", Orientation.COST, 1.0),
                CriterionSpec("subordinate-roles", Orientation.COST, 1.0 / s),
            ]
        )
        assert abs(weights[0] - 1.0 / (1.0 + s)) <= 1e-12
        assert abs(weights[1] - s / (1.0 + s)) <= 1e-12
    _report("criteria-weight closed form over s grid")


def test_brute_force_oracle():
    started = time.perf_counter()
    rng = random.Random(424242)
    checked = 0
    while checked < 200:
        graph = make_random_graph(rng, max_roles=8, max_perms=10)
        required = pick_satisfiable_request(rng, graph)
        if required is None:
            continue
        s = 1.0 if checked % 10 == 0 else rng.uniform(0.2, 5.0)
        result = rank_roles(graph, make_query(required, s=s))
        mode, expected = oracle_rank(graph, required, s)
        assert result.mode == mode
        assert result.ordering() == tuple(role for role, _ in expected)
        if mode == MODE_RANKED:
            for score, (_, probability) in zip(result.scores, expected):
                assert abs(score.probability - probability) <= 1e-9
        else:
            assert result.selected == expected[0][0]
        checked += 1
    elapsed = time.perf_counter() - started
    assert elapsed < 30.0
    _report(f"brute-force oracle, 200 random hierarchies in {elapsed:.2f}s")


def test_invariance_suite():
    rng = random.Random(777)

    # lambda-invariance of the whole probability vector under manager-cost
    checked = 0
    while checked < 20:
        graph = make_random_graph(rng)
        required = pick_satisfiable_request(rng, graph)
        if required is None:
            continue
        query = make_query(required, s=1.7, extended=[CRITERION_MANAGER_COST])
        baseline = rank_roles(graph, query)
        for lam in (0.1, 1.0, 7.0):
            other = rank_roles(
                graph,
                make_query(required, s=1.7, extended=[CRITERION_MANAGER_COST], lambda_=lam),
            )
            assert other.ordering() == baseline.ordering()
            for a, b in zip(baseline.scores, other.scores):
                assert abs(a.probability - b.probability) <= 1e-12
        checked += 1

    # scale-invariance of score weights
    np_rng = np.random.default_rng(11)
    for _ in range(50):
        k = int(np_rng.integers(1, 11))
        values = np_rng.uniform(1.0, 100.0, size=k)
        for orientation in (Orientation.COST, Orientation.BENEFIT):
            base = weights_from_scores(ScoreVector(values), orientation).weights
            for scale in (1e-3, 0.5, 3.0, 1e3):
                scaled = weights_from_scores(ScoreVector(values * scale), orientation).weights
                assert np.all(np.abs(base - scaled) <= 1e-12)

    # s-limit orderings: tiny s ranks by dp, huge s ranks by dr
    checked = 0
    while checked < 30:
        graph = make_random_graph(rng)
        required = pick_satisfiable_request(rng, graph)
        if required is None:
            continue
        result = rank_roles(graph, make_query(required, s=1e-6))
        if result.mode != MODE_RANKED:
            continue
        by_dp = sorted(result.scores, key=lambda sc: (sc.dp, sc.dr, sc.role))
        assert result.ordering() == tuple(sc.role for sc in by_dp)
        result = rank_roles(graph, make_query(required, s=1e6))
        by_dr = sorted(result.scores, key=lambda sc: (sc.dr, sc.dp, sc.role))
        assert result.ordering() == tuple(sc.role for sc in by_dr)
        checked += 1

    _report("invariance suite: lambda, scale, s-limits")


def test_complexity_sanity():
    sizes = (250, 500, 1000, 2000)
    timings = []
    for n in sizes:
        text, required = synthetic_hierarchy(n)
        best = float("inf")
        for _ in range(2):
            started = time.perf_counter()
            graph = parse_hierarchy(text)
            result = rank_roles(graph, make_query(required))
            best = min(best, time.perf_counter() - started)
        assert result.mode == MODE_RANKED
        assert len(result.scores) == 2
        timings.append(best)
    for smaller, larger in zip(timings, timings[1:]):
        assert larger <= 8.0 * max(smaller, 1e-4)
    assert timings[-1] < 5.0
    _report(
        "complexity sanity: "
        + ", ".join(f"n={n} {t * 1000:.1f}ms" for n, t in zip(sizes, timings))
    )


def test_cli_contract(tmp_path):
    path = tmp_path / "h1.rhf"
    path.write_text(H1_TEXT, encoding="utf-8")

    argv = ["rank", "--hierarchy", str(path), "--require", "p1,p2", "--s", "2"]
    first = _invoke(argv)
    second = _invoke(argv)
    assert first == second
    assert first[0] == 0
    assert first[1].encode() == second[1].encode()
    assert first[1] == "1\tr2\t0.555556\t2\t1\n2\tr1\t0.444444\t1\t2\n"

    bad = tmp_path / "cyclic.rhf"
    bad.write_text("role r1\nrole r2\ndominates r1 r2\ndominates r2 r1\n", encoding="utf-8")
    assert _invoke(["validate", "--hierarchy", str(bad)])[0] == 1

    assert _invoke(["rank", "--hierarchy", str(path)])[0] == 2

    _report("CLI determinism and exit codes")
