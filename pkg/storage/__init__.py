"""Run artifacts: trajectory CSV and summary JSON, written atomically."""

from storage.atomic import write_text_atomic
from storage.summary_store import write_summary
from storage.trajectory_store import trajectory_header, write_trajectory

__all__ = ["write_text_atomic", "write_trajectory", "trajectory_header", "write_summary"]
