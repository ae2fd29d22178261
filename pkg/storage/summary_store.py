"""Run summary JSON writer."""

from __future__ import annotations

from pathlib import Path

from schemas.run_summary import RunSummary
from storage.atomic import write_text_atomic


def write_summary(summary: RunSummary, destination: str | Path) -> Path:
    """Persist the summary as indented JSON; returns the written path."""
    return write_text_atomic(destination, summary.model_dump_json(indent=2) + "\n")
