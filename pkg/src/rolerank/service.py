"""HTTP facade over an immutable hierarchy snapshot.

Endpoints: PUT /hierarchy, GET /roles, POST /authorize, POST /sweep,
GET /health; admin UI static assets are served at /. Readers always work
against exactly one snapshot reference, so queries racing a replacement see
either the old or the new hierarchy, never a mix; every response echoes the
snapshot version it used.
"""

from __future__ import annotations

import logging
import threading
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Union

from fastapi import FastAPI, HTTPException, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, ConfigDict, Field

from . import report
from .errors import (
    HierarchyError,
    InvalidParameterError,
    NoCandidateError,
    NonPositivePreferenceError,
    UnknownCriterionError,
    UnknownPermissionError,
)
from .hierarchy import Issue, RoleGraph, ValidationReport, parse_hierarchy, validate
from .ranking import geometric_grid, make_query, rank_roles, sensitivity_sweep

logger = logging.getLogger("rolerank.service")


@dataclass(frozen=True)
class HierarchySnapshot:
    """One loaded hierarchy; versions increase on every successful replacement."""

    graph: RoleGraph
    version: int
    loaded_at: str


class SnapshotStore:
    """Atomically swappable snapshot holder; writers serialize, readers never block."""

    def __init__(self):
        self._lock = threading.Lock()
        self._snapshot: HierarchySnapshot | None = None

    def current(self) -> HierarchySnapshot | None:
        return self._snapshot

    def replace(self, graph: RoleGraph) -> HierarchySnapshot:
        with self._lock:
            version = self._snapshot.version + 1 if self._snapshot else 1
            snapshot = HierarchySnapshot(
                graph=graph,
                version=version,
                loaded_at=datetime.now(timezone.utc).isoformat(),
            )
            self._snapshot = snapshot
        logger.info("hierarchy replaced: version %d", snapshot.version)
        return snapshot


class CriterionIn(BaseModel):
    id: str
    firstRowPreference: float = 1.0


class AuthorizeBody(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    require: list[str] | None = None
    required: list[str] | None = None
    s: float = 1.0
    criteria: list[Union[str, CriterionIn]] = Field(default_factory=list)
    alpha: float = 1.0
    lambda_: float = Field(default=1.0, alias="lambda")

    def permission_ids(self) -> list[str]:
        ids = self.require if self.require is not None else self.required
        if not ids:
            raise InvalidParameterError("body must carry a non-empty 'require' list")
        return ids

    def extended(self) -> list[tuple[str, float]]:
        out = []
        for item in self.criteria:
            if isinstance(item, str):
                out.append((item, 1.0))
            else:
                out.append((item.id, item.firstRowPreference))
        return out


class SweepBody(AuthorizeBody):
    s_min: float = Field(default=0.1, alias="sMin")
    s_max: float = Field(default=10.0, alias="sMax")
    steps: int = 21


def default_static_dir() -> Path | None:
    """The built admin UI, when the frontend has been compiled next to this checkout."""
    candidate = Path.cwd() / "frontend" / "dist"
    return candidate if candidate.is_dir() else None


def _error_report(exc: HierarchyError) -> ValidationReport:
    code = type(exc).__name__.removesuffix("Error").upper()
    return ValidationReport.from_issues(
        [Issue(severity="error", code=code, message=str(exc), location=None)]
    )


def create_app(
    *,
    hierarchy_path: str | Path | None = None,
    hierarchy_text: str | None = None,
    static_dir: str | Path | None = None,
) -> FastAPI:
    """Build the service; optionally preload a hierarchy (invalid preloads fail fast)."""
    store = SnapshotStore()
    if hierarchy_path is not None:
        hierarchy_text = Path(hierarchy_path).read_text(encoding="utf-8")
    if hierarchy_text is not None:
        store.replace(parse_hierarchy(hierarchy_text))

    app = FastAPI(title="rolerank", version="0.1.0")
    app.state.store = store

    @app.exception_handler(RequestValidationError)
    async def malformed_body(_request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": exc.errors()})

    def current_snapshot() -> HierarchySnapshot:
        snapshot = store.current()
        if snapshot is None:
            raise HTTPException(status_code=409, detail="no hierarchy loaded")
        return snapshot

    def build_query(body: AuthorizeBody):
        try:
            return make_query(
                body.permission_ids(),
                s=body.s,
                extended=body.extended(),
                alpha=body.alpha,
                lambda_=body.lambda_,
            )
        except (InvalidParameterError, UnknownCriterionError, NonPositivePreferenceError) as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc

    @app.put("/hierarchy")
    async def put_hierarchy(request: Request):
        """Replace the snapshot; keep the previous one on any parse/validation failure."""
        raw = await request.body()
        try:
            text = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            return JSONResponse(
                status_code=400,
                content={
                    "report": _error_report(
                        HierarchyError(f"body is not valid UTF-8: {exc}")
                    ).to_dict()
                },
            )
        try:
            graph = parse_hierarchy(text)
        except HierarchyError as exc:
            return JSONResponse(status_code=400, content={"report": _error_report(exc).to_dict()})
        snapshot = store.replace(graph)
        return {"version": snapshot.version, "report": validate(graph).to_dict()}

    @app.get("/roles")
    def get_roles():
        """Per-role summary counts plus the edges and grants the admin UI renders."""
        snapshot = current_snapshot()
        graph = snapshot.graph
        juniors: dict[str, list[str]] = {role: [] for role in graph.roles}
        for senior, junior in sorted(graph.dominance):
            juniors[senior].append(junior)
        return {
            "version": snapshot.version,
            "roles": [
                {
                    "id": role,
                    "directPermissions": graph.direct_grant_count(role),
                    "effectivePermissions": graph.effective_size(role),
                    "dr": graph.dominated_count(role),
                    "dm": graph.direct_subordinates_count(role),
                    "juniors": juniors[role],
                    "grants": sorted(graph.grants[role]),
                }
                for role in graph.roles
            ],
        }

    @app.post("/authorize")
    def post_authorize(body: AuthorizeBody):
        snapshot = current_snapshot()
        query = build_query(body)
        try:
            result = rank_roles(snapshot.graph, query)
        except (NoCandidateError, UnknownPermissionError) as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        payload = report.ranking_to_dict(result)
        payload["version"] = snapshot.version
        return payload

    @app.post("/sweep")
    def post_sweep(body: SweepBody):
        snapshot = current_snapshot()
        query = build_query(body)
        try:
            grid = geometric_grid(body.s_min, body.s_max, body.steps)
        except InvalidParameterError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        try:
            sweep = sensitivity_sweep(snapshot.graph, query, grid)
        except (NoCandidateError, UnknownPermissionError) as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        payload = report.sweep_to_dict(sweep)
        payload["version"] = snapshot.version
        return payload

    @app.get("/health")
    def health():
        snapshot = store.current()
        return {"status": "ok", "version": snapshot.version if snapshot else None}

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")

    return app
