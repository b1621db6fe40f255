"""Exception types shared across the package."""


class RoleRankError(Exception):
    """Base class for all rolerank errors."""


class HierarchyError(RoleRankError):
    """Structural problem in a hierarchy definition."""


class HierarchySyntaxError(HierarchyError):
    """Malformed directive line in a hierarchy file."""


class DuplicateDeclarationError(HierarchyError):
    """A role or permission id was declared twice."""


class UnknownReferenceError(HierarchyError):
    """A directive names a role or permission that was never declared."""


class CycleError(HierarchyError):
    """The direct dominance relation contains a cycle."""


class UnknownRoleError(RoleRankError):
    """Query names a role that is not part of the hierarchy."""


class UnknownPermissionError(RoleRankError):
    """Query names a permission that is not part of the hierarchy."""


class NoCandidateError(RoleRankError):
    """No role's effective permission set covers the requested permissions."""


class InvalidParameterError(RoleRankError, ValueError):
    """A query or grid parameter is outside its legal range."""


class UnknownCriterionError(RoleRankError, ValueError):
    """Criterion id is not one of the supported selection criteria."""


class EmptyScoresError(RoleRankError, ValueError):
    """A score vector must contain at least one value."""


class NonPositivePreferenceError(RoleRankError, ValueError):
    """Criteria preferences must be strictly positive."""


class DimensionMismatchError(RoleRankError, ValueError):
    """Weight vectors being combined do not share a common dimension."""


class NoConvergenceError(RoleRankError):
    """Power iteration hit its iteration cap before the eigenvalue settled."""


class CandidateNotSupersetError(RoleRankError):
    """Internal error: a candidate role does not cover the request it was selected for."""
