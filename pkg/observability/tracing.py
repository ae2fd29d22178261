"""Run-id context so log lines from one simulation (or one sweep member) can be correlated."""

from __future__ import annotations

import uuid
from contextvars import ContextVar

_run_id: ContextVar[str | None] = ContextVar("run_id", default=None)


def get_run_id() -> str | None:
    """Return current run id, or None if not set."""
    return _run_id.get()


def set_run_id(run_id: str | None = None, *, prefix: str | None = None) -> str:
    """Set run id for current context. If None, generate one (optionally prefixed). Returns the id."""
    if run_id is None:
        short = uuid.uuid4().hex[:8]
        run_id = f"{prefix}-{short}" if prefix else short
    _run_id.set(run_id)
    return run_id


def clear_run_id() -> None:
    """Clear run id for current context."""
    _run_id.set(None)
