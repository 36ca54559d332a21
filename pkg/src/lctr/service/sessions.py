"""In-memory play sessions: a human against the optimal engine.

Sessions are mutable and guarded by a per-session lock; a move request
that arrives while another is being processed is rejected rather than
queued, which keeps mutation linearizable without making clients wait.
An optional JSON-lines log records every accepted move for later
analysis.
"""

from __future__ import annotations

import json
import secrets
import threading
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Optional

from ..engine import Outcome, best_move, follower_values, outcome, sg_grid
from ..partitions import MoveKind, Partition

ENGINE_ROLES = ("none", "plays_first", "plays_second")

HUMAN = "human"
ENGINE = "engine"
MOVER = "mover"

# Refuse boards bigger than this; play is interactive and the UI renders
# every box.
MAX_SESSION_CELLS = 10**6


class UnknownSessionError(KeyError):
    """No session with that id."""


class SessionConflictError(RuntimeError):
    """The request is valid but the session state forbids it right now."""


@dataclass
class HistoryEntry:
    actor: str
    move: MoveKind
    resulting: Partition


@dataclass
class GameSession:
    id: str
    start: Partition
    engine_role: str
    position: Partition
    history: list[HistoryEntry] = field(default_factory=list)
    finished: bool = False
    winner: Optional[str] = None
    lock: threading.Lock = field(default_factory=threading.Lock)


class SessionStore:
    def __init__(self, log_path: Optional[str] = None):
        self._sessions: dict[str, GameSession] = {}
        self._registry_lock = threading.Lock()
        self._log_path = log_path
        self._log_lock = threading.Lock()

    def create_session(self, start: Partition, engine_role: str) -> GameSession:
        """New session; when the engine plays first its move is applied now."""
        if engine_role not in ENGINE_ROLES:
            raise ValueError(f"engine_role must be one of {ENGINE_ROLES}")
        if start.is_empty:
            raise ValueError("the start partition must be nonempty")
        if start.size > MAX_SESSION_CELLS:
            raise ValueError(f"start partition exceeds {MAX_SESSION_CELLS} boxes")
        session = GameSession(
            id=secrets.token_urlsafe(12),
            start=start,
            engine_role=engine_role,
            position=start,
        )
        if engine_role == "plays_first":
            move, resulting = best_move(session.position)
            self._apply(session, ENGINE, move, resulting)
        with self._registry_lock:
            self._sessions[session.id] = session
        return session

    def get(self, session_id: str) -> GameSession:
        with self._registry_lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise UnknownSessionError(session_id)
        return session

    def apply_human_move(self, session_id: str, move: MoveKind) -> GameSession:
        """Apply the human's move; the engine answers in the same call.

        Rejects with SessionConflictError when the game is over or when
        another move for this session is still in flight.
        """
        session = self.get(session_id)
        if not session.lock.acquire(blocking=False):
            raise SessionConflictError("another move for this game is in progress")
        try:
            if session.finished:
                raise SessionConflictError("the game is finished")
            resulting = session.position.apply(move)
            self._apply(session, HUMAN, move, resulting)
            if not session.finished and session.engine_role != "none":
                engine_move, engine_result = best_move(session.position)
                self._apply(session, ENGINE, engine_move, engine_result)
        finally:
            session.lock.release()
        return session

    def view(self, session: GameSession) -> dict:
        """JSON-ready snapshot of a session."""
        with session.lock:
            return {
                "id": session.id,
                "start": list(session.start.parts),
                "position": list(session.position.parts),
                "rows": list(session.position.parts),
                "turn": None if session.finished else HUMAN,
                "finished": session.finished,
                "winner": session.winner,
                "engine_role": session.engine_role,
                "history": [
                    {
                        "actor": entry.actor,
                        "move": entry.move.value,
                        "resulting": list(entry.resulting.parts),
                    }
                    for entry in session.history
                ],
            }

    def hint(self, session_id: str) -> dict:
        """Grundy value, outcome and both follower values for the position."""
        session = self.get(session_id)
        with session.lock:
            if session.finished:
                raise SessionConflictError("the game is finished")
            position = session.position
        values = follower_values(position)
        followers = {
            kind.value: {"partition": list(follower.parts), "sg": sg}
            for kind, (follower, sg) in values.items()
        }
        return {
            "sg": sg_grid(position),
            "outcome": outcome(position).value,
            "followers": followers,
        }

    def _apply(self, session: GameSession, actor: str, move: MoveKind, resulting: Partition) -> None:
        session.position = resulting
        session.history.append(HistoryEntry(actor=actor, move=move, resulting=resulting))
        if resulting.is_empty:
            session.finished = True
            # normal play: whoever just moved wins; engine-less games
            # report the anonymous "mover" since seats are not tracked
            session.winner = actor if session.engine_role != "none" else MOVER
        self._log(session, actor, move, resulting)

    def _log(self, session: GameSession, actor: str, move: MoveKind, resulting: Partition) -> None:
        if not self._log_path:
            return
        record = {
            "ts": datetime.now(timezone.utc).isoformat(),
            "game": session.id,
            "actor": actor,
            "move": move.value,
            "resulting": list(resulting.parts),
        }
        line = json.dumps(record)
        with self._log_lock:
            with open(self._log_path, "a", encoding="utf-8") as fh:
                fh.write(line + "\n")
