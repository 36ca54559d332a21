"""Pydantic request/response models for the play service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel

EngineRole = Literal["none", "plays_first", "plays_second"]
MoveToken = Literal["L", "T"]


class CreateGameRequest(BaseModel):
    start: str
    engine_role: EngineRole = "plays_second"


class MoveRequest(BaseModel):
    move: MoveToken


class HistoryEntry(BaseModel):
    actor: Literal["human", "engine"]
    move: MoveToken
    resulting: list[int]


class GameState(BaseModel):
    id: str
    start: list[int]
    position: list[int]
    rows: list[int]
    turn: Optional[Literal["human"]] = None
    finished: bool
    winner: Optional[Literal["human", "engine", "mover"]] = None
    engine_role: EngineRole
    history: list[HistoryEntry]


class CreateGameResponse(BaseModel):
    id: str
    state: GameState


class FollowerInfo(BaseModel):
    partition: list[int]
    sg: int


class HintResponse(BaseModel):
    sg: int
    outcome: Literal["N", "P"]
    followers: dict[MoveToken, FollowerInfo]


class ErrorBody(BaseModel):
    error: str
