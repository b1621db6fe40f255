"""Role-hierarchy model: parsing, permission/dominance closures, candidate roles.

Hierarchy files ("RHF") are line-based UTF-8. ``#`` starts a comment, blank
lines are ignored, and each directive is a whitespace-separated line::

    permission <id>
    role <id>
    grant <role-id> <perm-id>
    dominates <senior-id> <junior-id>
    danger <perm-id>

Declarations must precede use and duplicate declarations are rejected. The
direct dominance relation must be acyclic; reflexivity and transitivity are
computed, never stored. Permission sets are kept as integer bit vectors over
a permission ordering frozen at construction time, so superset tests cost
O(m/64) regardless of how permissions are spread across the hierarchy.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from graphlib import CycleError as _GraphlibCycleError
from graphlib import TopologicalSorter
from typing import Iterable, Mapping

from .errors import (
    CycleError,
    DuplicateDeclarationError,
    HierarchySyntaxError,
    InvalidParameterError,
    NoCandidateError,
    UnknownPermissionError,
    UnknownReferenceError,
    UnknownRoleError,
)

_ID_PATTERN = re.compile(r"^[A-Za-z0-9_.-]+$")

_DIRECTIVE_ARITY = {
    "permission": 1,
    "role": 1,
    "grant": 2,
    "dominates": 2,
    "danger": 1,
}


def _check_id(kind: str, ident: str) -> None:
    if not _ID_PATTERN.match(ident):
        raise HierarchySyntaxError(f"invalid {kind} id {ident!r}")


@dataclass(frozen=True)
class PermissionRequest:
    """The set of permission ids a user needs for a session."""

    required: frozenset[str]

    def __init__(self, required: Iterable[str]):
        object.__setattr__(self, "required", frozenset(required))
        if not self.required:
            raise InvalidParameterError("permission request must name at least one permission")


@dataclass(frozen=True)
class Issue:
    """One validation finding."""

    severity: str  # "error" | "warning"
    code: str
    message: str
    location: str | None = None

    def to_dict(self) -> dict:
        return {
            "severity": self.severity,
            "code": self.code,
            "message": self.message,
            "location": self.location,
        }


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of checking a hierarchy; ok iff no issue has severity error."""

    ok: bool
    issues: tuple[Issue, ...] = ()

    def to_dict(self) -> dict:
        return {"ok": self.ok, "issues": [issue.to_dict() for issue in self.issues]}

    @classmethod
    def from_issues(cls, issues: Iterable[Issue]) -> "ValidationReport":
        issues = tuple(issues)
        return cls(ok=not any(i.severity == "error" for i in issues), issues=issues)


class RoleGraph:
    """Immutable role hierarchy with precomputed closures.

    All queries are pure and safe for unlimited concurrent readers; replacing
    a hierarchy means building a new graph and swapping the reference.
    """

    __slots__ = (
        "_roles",
        "_permissions",
        "_grants",
        "_dominance",
        "_danger",
        "_danger_bits",
        "_perm_bit",
        "_juniors",
        "_dominated_bits",
        "_effective_bits",
        "_role_order",
        "_dominated_cache",
        "_effective_cache",
    )

    def __init__(
        self,
        roles: Iterable[str],
        permissions: Iterable[str],
        grants: Mapping[str, Iterable[str]],
        dominance: Iterable[tuple[str, str]],
        danger_permissions: Iterable[str] = (),
    ):
        self._roles = tuple(sorted(set(roles)))
        self._permissions = tuple(sorted(set(permissions)))
        for role in self._roles:
            _check_id("role", role)
        for perm in self._permissions:
            _check_id("permission", perm)

        role_set = set(self._roles)
        perm_set = set(self._permissions)
        self._perm_bit = {perm: 1 << idx for idx, perm in enumerate(self._permissions)}
        self._role_order = {role: idx for idx, role in enumerate(self._roles)}

        normalized: dict[str, frozenset[str]] = {role: frozenset() for role in self._roles}
        for role, perms in grants.items():
            if role not in role_set:
                raise UnknownReferenceError(f"grant names undeclared role {role!r}")
            perms = frozenset(perms)
            for perm in perms:
                if perm not in perm_set:
                    raise UnknownReferenceError(f"grant names undeclared permission {perm!r}")
            normalized[role] = perms
        self._grants = normalized

        edges = frozenset(dominance)
        for senior, junior in edges:
            if senior not in role_set:
                raise UnknownReferenceError(f"dominates names undeclared role {senior!r}")
            if junior not in role_set:
                raise UnknownReferenceError(f"dominates names undeclared role {junior!r}")
        self._dominance = edges

        self._danger = frozenset(danger_permissions)
        for perm in self._danger:
            if perm not in perm_set:
                raise UnknownReferenceError(f"danger names undeclared permission {perm!r}")
        danger_bits = 0
        for perm in self._danger:
            danger_bits |= self._perm_bit[perm]
        self._danger_bits = danger_bits

        juniors: dict[str, list[str]] = {role: [] for role in self._roles}
        for senior, junior in edges:
            juniors[senior].append(junior)
        self._juniors = {role: tuple(sorted(js)) for role, js in juniors.items()}

        try:
            order = tuple(TopologicalSorter(self._juniors).static_order())
        except _GraphlibCycleError as exc:
            raise CycleError(f"dominance relation is cyclic: {exc.args[1]}") from exc

        # Juniors come first in `order`, so a single pass accumulates both the
        # reflexive-transitive dominated set and the effective permission set.
        dominated_bits: dict[str, int] = {}
        effective_bits: dict[str, int] = {}
        for role in order:
            dom = 1 << self._role_order[role]
            eff = 0
            for perm in self._grants[role]:
                eff |= self._perm_bit[perm]
            for junior in self._juniors[role]:
                dom |= dominated_bits[junior]
                eff |= effective_bits[junior]
            dominated_bits[role] = dom
            effective_bits[role] = eff
        self._dominated_bits = dominated_bits
        self._effective_bits = effective_bits
        self._dominated_cache: dict[str, frozenset[str]] = {}
        self._effective_cache: dict[str, frozenset[str]] = {}

    # -- declarative views -------------------------------------------------

    @property
    def roles(self) -> tuple[str, ...]:
        return self._roles

    @property
    def permissions(self) -> tuple[str, ...]:
        return self._permissions

    @property
    def grants(self) -> Mapping[str, frozenset[str]]:
        return self._grants

    @property
    def dominance(self) -> frozenset[tuple[str, str]]:
        return self._dominance

    @property
    def danger_permissions(self) -> frozenset[str]:
        return self._danger

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RoleGraph):
            return NotImplemented
        return (
            self._roles == other._roles
            and self._permissions == other._permissions
            and self._grants == other._grants
            and self._dominance == other._dominance
            and self._danger == other._danger
        )

    def __hash__(self) -> int:  # pragma: no cover - identity use only
        return hash((self._roles, self._permissions, self._dominance))

    def __repr__(self) -> str:
        return (
            f"RoleGraph(roles={len(self._roles)}, permissions={len(self._permissions)}, "
            f"edges={len(self._dominance)})"
        )

    # -- queries -----------------------------------------------------------

    def _require_role(self, role: str) -> None:
        if role not in self._role_order:
            raise UnknownRoleError(f"unknown role {role!r}")

    def effective_permissions(self, role: str) -> frozenset[str]:
        """Permissions reachable from a role: direct grants plus everything inherited downward."""
        self._require_role(role)
        cached = self._effective_cache.get(role)
        if cached is None:
            bits = self._effective_bits[role]
            cached = frozenset(p for p in self._permissions if bits & self._perm_bit[p])
            self._effective_cache[role] = cached
        return cached

    def effective_size(self, role: str) -> int:
        """|effective_permissions(role)| without materializing the set."""
        self._require_role(role)
        return self._effective_bits[role].bit_count()

    def dominated_roles(self, role: str) -> frozenset[str]:
        """Reflexive-transitive dominance closure; always contains the role itself."""
        self._require_role(role)
        cached = self._dominated_cache.get(role)
        if cached is None:
            bits = self._dominated_bits[role]
            cached = frozenset(r for r in self._roles if bits & (1 << self._role_order[r]))
            self._dominated_cache[role] = cached
        return cached

    def dominated_count(self, role: str) -> int:
        """|dominated_roles(role)|; at least 1 because every role dominates itself."""
        self._require_role(role)
        return self._dominated_bits[role].bit_count()

    def direct_subordinates_count(self, role: str) -> int:
        """Number of distinct direct juniors; self excluded."""
        self._require_role(role)
        return len(self._juniors[role])

    def direct_grant_count(self, role: str) -> int:
        self._require_role(role)
        return len(self._grants[role])

    def danger_permission_count(self, role: str) -> int:
        """How many of the role's effective permissions are flagged as integrity-dangerous."""
        self._require_role(role)
        return (self._effective_bits[role] & self._danger_bits).bit_count()

    def request_bits(self, request: PermissionRequest) -> int:
        """Bit vector of a request over the frozen permission ordering."""
        bits = 0
        unknown = sorted(p for p in request.required if p not in self._perm_bit)
        if unknown:
            raise UnknownPermissionError(f"unknown permission ids: {', '.join(unknown)}")
        for perm in request.required:
            bits |= self._perm_bit[perm]
        return bits

    def covers(self, role: str, request_bits: int) -> bool:
        """Whether the role's effective permissions include every requested bit."""
        self._require_role(role)
        return request_bits & self._effective_bits[role] == request_bits

    def candidate_roles(self, request: PermissionRequest) -> list[str]:
        """Roles whose effective permissions include the whole request, in lexicographic order."""
        wanted = self.request_bits(request)
        found = [r for r in self._roles if wanted & self._effective_bits[r] == wanted]
        if not found:
            raise NoCandidateError(
                "no role grants all requested permissions: " + ", ".join(sorted(request.required))
            )
        return found


def parse_hierarchy(text: str) -> RoleGraph:
    """Parse RHF text into a validated RoleGraph."""
    perms: set[str] = set()
    roles: set[str] = set()
    grants: dict[str, set[str]] = {}
    edges: set[tuple[str, str]] = set()
    danger: set[str] = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        kind = tokens[0]
        arity = _DIRECTIVE_ARITY.get(kind)
        if arity is None:
            raise HierarchySyntaxError(f"line {lineno}: unknown directive {kind!r}")
        if len(tokens) - 1 != arity:
            raise HierarchySyntaxError(
                f"line {lineno}: {kind} expects {arity} argument(s), got {len(tokens) - 1}"
            )
        for token in tokens[1:]:
            if not _ID_PATTERN.match(token):
                raise HierarchySyntaxError(f"line {lineno}: invalid identifier {token!r}")

        if kind == "permission":
            if tokens[1] in perms:
                raise DuplicateDeclarationError(
                    f"line {lineno}: permission {tokens[1]!r} already declared"
                )
            perms.add(tokens[1])
        elif kind == "role":
            if tokens[1] in roles:
                raise DuplicateDeclarationError(f"line {lineno}: role {tokens[1]!r} already declared")
            roles.add(tokens[1])
            grants[tokens[1]] = set()
        elif kind == "grant":
            role, perm = tokens[1], tokens[2]
            if role not in roles:
                raise UnknownReferenceError(f"line {lineno}: grant names undeclared role {role!r}")
            if perm not in perms:
                raise UnknownReferenceError(
                    f"line {lineno}: grant names undeclared permission {perm!r}"
                )
            grants[role].add(perm)
        elif kind == "dominates":
            senior, junior = tokens[1], tokens[2]
            if senior not in roles:
                raise UnknownReferenceError(
                    f"line {lineno}: dominates names undeclared role {senior!r}"
                )
            if junior not in roles:
                raise UnknownReferenceError(
                    f"line {lineno}: dominates names undeclared role {junior!r}"
                )
            edges.add((senior, junior))
        else:  # danger
            perm = tokens[1]
            if perm not in perms:
                raise UnknownReferenceError(
                    f"line {lineno}: danger names undeclared permission {perm!r}"
                )
            danger.add(perm)

    return RoleGraph(roles, perms, grants, edges, danger)


def serialize_hierarchy(graph: RoleGraph) -> str:
    """Canonical RHF text: directives sorted within each class, classes in declaration order."""
    lines: list[str] = []
    lines.extend(f"permission {p}" for p in graph.permissions)
    lines.extend(f"role {r}" for r in graph.roles)
    lines.extend(
        f"grant {role} {perm}"
        for role in graph.roles
        for perm in sorted(graph.grants[role])
    )
    lines.extend(f"dominates {s} {j}" for s, j in sorted(graph.dominance))
    lines.extend(f"danger {p}" for p in sorted(graph.danger_permissions))
    return "\n".join(lines) + "\n"


def validate(graph: RoleGraph) -> ValidationReport:
    """Report structural warnings; a constructed graph can no longer hold errors."""
    issues: list[Issue] = []
    granted: set[str] = set()
    for perms in graph.grants.values():
        granted |= perms
    for role in graph.roles:
        if graph.effective_size(role) == 0:
            issues.append(
                Issue(
                    severity="warning",
                    code="EMPTY_ROLE",
                    message=f"role {role!r} grants no permissions, directly or via dominance",
                    location=f"role {role}",
                )
            )
    for perm in graph.permissions:
        if perm not in granted:
            issues.append(
                Issue(
                    severity="warning",
                    code="UNUSED_PERMISSION",
                    message=f"permission {perm!r} is granted to no role",
                    location=f"permission {perm}",
                )
            )
    return ValidationReport.from_issues(issues)
