"""HTTP session service: create games, play moves, ask for hints.

All request and response bodies are JSON. Claims travel as sorted vertex
index arrays and status is one of "ongoing", "r_won", "s_won".
"""

from __future__ import annotations

import os
from pathlib import Path
from typing import Literal, Optional

from fastapi import FastAPI, HTTPException
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from .families import FamilyError, FamilySpec, family_catalog, generate
from .graphs import Graph, GraphError
from .sessions import (
    IllegalMoveError,
    SessionError,
    SessionStore,
    UnknownSessionError,
)


class FamilySpecModel(BaseModel):
    kind: str
    params: list[int] = Field(default_factory=list)


class GraphModel(BaseModel):
    n: int
    edges: list[tuple[int, int]]
    labels: Optional[list[str]] = None


class CreateSessionRequest(BaseModel):
    family: Optional[FamilySpecModel] = None
    graph: Optional[GraphModel] = None
    human_role: Literal["R", "S"]
    first_player: Literal["R", "S"]


class MoveRequest(BaseModel):
    vertex: int


def create_app(
    idle_ttl_s: float = 3600.0,
    create_guard: int = 16,
    solve_record_guard: int = 12,
    frontend_dir: Optional[str] = None,
) -> FastAPI:
    app = FastAPI(title="resolving-game", version="0.1.0")
    store = SessionStore(
        idle_ttl_s=idle_ttl_s,
        create_guard=create_guard,
        solve_record_guard=solve_record_guard,
    )
    app.state.store = store

    @app.post("/api/session")
    def create_session(req: CreateSessionRequest) -> dict:
        if (req.family is None) == (req.graph is None):
            raise HTTPException(400, "provide exactly one of 'family' or 'graph'")
        family = None
        try:
            if req.family is not None:
                family = FamilySpec(req.family.kind, tuple(req.family.params))
                graph = generate(family)
            else:
                graph = Graph(req.graph.n, req.graph.edges, req.graph.labels)
        except (FamilyError, GraphError) as exc:
            raise HTTPException(400, str(exc))
        try:
            session = store.create(graph, req.human_role, req.first_player, family)
        except SessionError as exc:
            raise HTTPException(400, str(exc))
        return session.to_view()

    @app.get("/api/session/{session_id}")
    def get_session(session_id: str) -> dict:
        try:
            return store.view(session_id)
        except UnknownSessionError:
            raise HTTPException(404, "unknown session")

    @app.post("/api/session/{session_id}/move")
    def post_move(session_id: str, req: MoveRequest) -> dict:
        try:
            session = store.play_move(session_id, req.vertex)
        except UnknownSessionError:
            raise HTTPException(404, "unknown session")
        except IllegalMoveError as exc:
            raise HTTPException(409, str(exc))
        except SessionError as exc:
            raise HTTPException(400, str(exc))
        return session.to_view()

    @app.get("/api/session/{session_id}/hint")
    def get_hint(session_id: str) -> dict:
        try:
            return store.hint(session_id)
        except UnknownSessionError:
            raise HTTPException(404, "unknown session")
        except IllegalMoveError as exc:
            raise HTTPException(409, str(exc))

    @app.get("/api/families")
    def families() -> list[dict]:
        return family_catalog()

    if frontend_dir is None:
        frontend_dir = os.environ.get("RESOLVING_GAME_FRONTEND")
    if frontend_dir is None:
        candidate = Path(__file__).resolve().parents[2] / "frontend"
        if (candidate / "public" / "index.html").exists():
            frontend_dir = str(candidate)
    if frontend_dir and Path(frontend_dir, "public", "index.html").exists():
        dist = Path(frontend_dir, "dist")
        if dist.exists():
            app.mount("/dist", StaticFiles(directory=str(dist)), name="dist")
        app.mount(
            "/",
            StaticFiles(directory=str(Path(frontend_dir, "public")), html=True),
            name="ui",
        )
    return app


app = create_app()
