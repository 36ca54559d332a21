"""HTTP interface for live play: JSON over four endpoints.

POST /games             create a session        201 {id, state}
GET  /games/{id}        current state           200 state
POST /games/{id}/moves  human move (+ reply)    200 state
GET  /games/{id}/hint   values for the position 200 hint

Errors are {"error": "..."} with 404 (unknown game), 409 (finished or
move in flight) and 422 (invalid input).
"""

from __future__ import annotations

from typing import Optional

from fastapi import FastAPI, HTTPException, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from ..partitions import MoveKind, parse_partition
from .schemas import (
    CreateGameRequest,
    CreateGameResponse,
    GameState,
    HintResponse,
    MoveRequest,
)
from .sessions import SessionConflictError, SessionStore, UnknownSessionError


def create_app(store: Optional[SessionStore] = None, log_path: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="lctr play service", version="0.1.0")
    app.state.store = store if store is not None else SessionStore(log_path=log_path)
    # desk-scale tool with unguessable ids; let any local UI origin talk to it
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    @app.exception_handler(HTTPException)
    async def http_error(request: Request, exc: HTTPException) -> JSONResponse:
        return JSONResponse({"error": str(exc.detail)}, status_code=exc.status_code)

    @app.exception_handler(RequestValidationError)
    async def validation_error(request: Request, exc: RequestValidationError) -> JSONResponse:
        return JSONResponse({"error": str(exc.errors())}, status_code=422)

    def sessions() -> SessionStore:
        return app.state.store

    @app.post("/games", status_code=201, response_model=CreateGameResponse)
    def create_game(body: CreateGameRequest) -> dict:
        store = sessions()
        try:
            start = parse_partition(body.start)
            session = store.create_session(start, body.engine_role)
        except ValueError as exc:
            raise HTTPException(422, str(exc))
        return {"id": session.id, "state": store.view(session)}

    @app.get("/games/{game_id}", response_model=GameState)
    def get_game(game_id: str) -> dict:
        store = sessions()
        try:
            session = store.get(game_id)
        except UnknownSessionError:
            raise HTTPException(404, f"no game {game_id}")
        return store.view(session)

    @app.post("/games/{game_id}/moves", response_model=GameState)
    def post_move(game_id: str, body: MoveRequest) -> dict:
        store = sessions()
        try:
            session = store.apply_human_move(game_id, MoveKind.from_token(body.move))
        except UnknownSessionError:
            raise HTTPException(404, f"no game {game_id}")
        except SessionConflictError as exc:
            raise HTTPException(409, str(exc))
        except ValueError as exc:
            raise HTTPException(422, str(exc))
        return store.view(session)

    @app.get("/games/{game_id}/hint", response_model=HintResponse)
    def get_hint(game_id: str) -> dict:
        store = sessions()
        try:
            return store.hint(game_id)
        except UnknownSessionError:
            raise HTTPException(404, f"no game {game_id}")
        except SessionConflictError as exc:
            raise HTTPException(409, str(exc))

    return app


app = create_app()
