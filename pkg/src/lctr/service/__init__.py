from .app import create_app
from .sessions import SessionConflictError, SessionStore, UnknownSessionError

__all__ = ["create_app", "SessionStore", "SessionConflictError", "UnknownSessionError"]
