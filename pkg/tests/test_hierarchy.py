import random

import pytest

from rolerank import (
    CycleError,
    DuplicateDeclarationError,
    HierarchySyntaxError,
    NoCandidateError,
    PermissionRequest,
    RoleGraph,
    UnknownPermissionError,
    UnknownReferenceError,
    UnknownRoleError,
    parse_hierarchy,
    serialize_hierarchy,
    validate,
)

from graphgen import make_random_graph, naive_candidates, naive_dominated, naive_effective


class TestParse:
    def test_minimal_graph(self):
        graph = parse_hierarchy(
            "permission p1\nrole r1\nrole r2\ngrant r1 p1\ndominates r1 r2\n"
        )
        assert graph.roles == ("r1", "r2")
        assert graph.permissions == ("p1",)
        assert graph.grants["r1"] == {"p1"}
        assert graph.dominance == {("r1", "r2")}

    def test_comments_and_blank_lines_ignored(self):
        graph = parse_hierarchy("# heading\n\npermission p1  # trailing\nrole r1\ngrant r1 p1\n")
        assert graph.grants["r1"] == {"p1"}

    def test_two_cycle_rejected(self):
        text = "role r1\nrole r2\ndominates r1 r2\ndominates r2 r1\n"
        with pytest.raises(CycleError):
            parse_hierarchy(text)

    def test_self_domination_rejected(self):
        with pytest.raises(CycleError):
            parse_hierarchy("role r1\ndominates r1 r1\n")

    def test_unknown_grant_target(self):
        with pytest.raises(UnknownReferenceError):
            parse_hierarchy("role r1\ngrant r1 pX\n")

    def test_declaration_must_precede_use(self):
        with pytest.raises(UnknownReferenceError):
            parse_hierarchy("permission p1\ngrant r1 p1\nrole r1\n")

    def test_duplicate_role(self):
        with pytest.raises(DuplicateDeclarationError):
            parse_hierarchy("role r1\nrole r1\n")

    def test_duplicate_permission(self):
        with pytest.raises(DuplicateDeclarationError):
            parse_hierarchy("permission p1\npermission p1\n")

    def test_malformed_line(self):
        with pytest.raises(HierarchySyntaxError):
            parse_hierarchy("grant r1\n")

    def test_unknown_directive(self):
        with pytest.raises(HierarchySyntaxError):
            parse_hierarchy("allow r1 p1\n")

    def test_bad_identifier(self):
        with pytest.raises(HierarchySyntaxError):
            parse_hierarchy("permission p/1\n")

    def test_danger_requires_declared_permission(self):
        with pytest.raises(UnknownReferenceError):
            parse_hierarchy("role r1\ndanger p9\n")

    def test_syntax_error_reports_line_number(self):
        with pytest.raises(HierarchySyntaxError, match="line 2"):
            parse_hierarchy("role r1\ngrant r1\n")


class TestValidate:
    def test_clean_graph(self, h1):
        report = validate(h1)
        assert report.ok
        assert report.issues == ()

    def test_unused_permission_warning(self):
        graph = parse_hierarchy("permission p1\npermission p9\nrole r1\ngrant r1 p1\n")
        report = validate(graph)
        assert report.ok
        assert [i.code for i in report.issues] == ["UNUSED_PERMISSION"]

    def test_empty_role_warning(self):
        graph = parse_hierarchy("permission p1\nrole r1\nrole r2\ngrant r1 p1\n")
        report = validate(graph)
        assert report.ok
        assert [i.code for i in report.issues] == ["EMPTY_ROLE"]

    def test_diamond_is_allowed(self):
        graph = parse_hierarchy(
            "role a\nrole b\nrole c\nrole d\n"
            "dominates a b\ndominates a c\ndominates b d\ndominates c d\n"
        )
        report = validate(graph)
        assert report.ok
        assert graph.dominated_roles("a") == {"a", "b", "c", "d"}


class TestClosures:
    def test_leaf_effective_is_direct(self, h1):
        assert h1.effective_permissions("r3") == {"p3"}

    def test_senior_inherits_junior_permissions(self, h1):
        assert h1.effective_permissions("r1") == {"p1", "p2", "p3"}
        assert h1.effective_permissions("r2") == {"p1", "p2", "p3", "p4"}

    def test_dominated_contains_self(self, h1):
        assert h1.dominated_roles("r2") == {"r2"}
        assert h1.dominated_count("r2") == 1

    def test_dominated_closure(self, h1):
        assert h1.dominated_roles("r1") == {"r1", "r3"}

    def test_chain_transitivity(self):
        graph = parse_hierarchy("role a\nrole b\nrole c\ndominates a b\ndominates b c\n")
        assert graph.dominated_roles("a") == {"a", "b", "c"}
        assert graph.direct_subordinates_count("a") == 1

    def test_direct_subordinates(self, h1):
        assert h1.direct_subordinates_count("r1") == 1
        assert h1.direct_subordinates_count("r2") == 0
        assert h1.direct_subordinates_count("r3") == 0

    def test_unknown_role_raises(self, h1):
        with pytest.raises(UnknownRoleError):
            h1.effective_permissions("r9")
        with pytest.raises(UnknownRoleError):
            h1.dominated_roles("r9")
        with pytest.raises(UnknownRoleError):
            h1.direct_subordinates_count("r9")


class TestCandidates:
    def test_h1_candidates(self, h1):
        assert h1.candidate_roles(PermissionRequest({"p1", "p2"})) == ["r1", "r2"]

    def test_exact_effective_set_is_candidate(self, h1):
        assert "r3" in h1.candidate_roles(PermissionRequest({"p3"}))

    def test_no_candidate(self, h1):
        graph = parse_hierarchy("permission p1\npermission p9\nrole r1\ngrant r1 p1\n")
        with pytest.raises(NoCandidateError):
            graph.candidate_roles(PermissionRequest({"p9"}))

    def test_unknown_permission(self, h1):
        with pytest.raises(UnknownPermissionError):
            h1.candidate_roles(PermissionRequest({"pX"}))

    def test_empty_request_rejected(self):
        with pytest.raises(Exception):
            PermissionRequest([])


class TestProperties:
    def test_reflexivity_and_monotonicity(self):
        rng = random.Random(20260809)
        for _ in range(50):
            graph = make_random_graph(rng)
            for role in graph.roles:
                dominated = graph.dominated_roles(role)
                assert role in dominated
                assert len(dominated) >= 1
            for senior, junior in graph.dominance:
                assert graph.effective_permissions(junior) <= graph.effective_permissions(senior)
                assert graph.dominated_roles(junior) <= graph.dominated_roles(senior)

    def test_closures_match_naive_sets(self):
        rng = random.Random(7)
        for _ in range(50):
            graph = make_random_graph(rng)
            for role in graph.roles:
                assert graph.dominated_roles(role) == naive_dominated(graph, role)
                assert graph.effective_permissions(role) == naive_effective(graph, role)

    def test_candidates_match_brute_force(self):
        rng = random.Random(99)
        checked = 0
        while checked < 100:
            graph = make_random_graph(rng)
            satisfiable = [r for r in graph.roles if graph.effective_permissions(r)]
            if not satisfiable:
                continue
            pool = sorted(graph.effective_permissions(rng.choice(satisfiable)))
            required = frozenset(rng.sample(pool, rng.randint(1, len(pool))))
            assert graph.candidate_roles(PermissionRequest(required)) == naive_candidates(
                graph, required
            )
            checked += 1

    def test_parse_serialize_round_trip(self, h1):
        assert parse_hierarchy(serialize_hierarchy(h1)) == h1

    def test_round_trip_random_graphs(self):
        rng = random.Random(123)
        for _ in range(25):
            graph = make_random_graph(rng)
            again = parse_hierarchy(serialize_hierarchy(graph))
            assert again == graph
            assert serialize_hierarchy(again) == serialize_hierarchy(graph)


class TestDirectConstruction:
    def test_endpoints_validated(self):
        with pytest.raises(UnknownReferenceError):
            RoleGraph(["r1"], ["p1"], {"r1": ["p2"]}, [])
        with pytest.raises(UnknownReferenceError):
            RoleGraph(["r1"], ["p1"], {}, [("r1", "r9")])
        with pytest.raises(UnknownReferenceError):
            RoleGraph(["r1"], ["p1"], {}, [], danger_permissions=["p9"])
