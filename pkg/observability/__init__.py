"""Run logs and run-id correlation for simulations and sweeps."""

from observability.logger import get_logger, log_run_step
from observability.tracing import clear_run_id, get_run_id, set_run_id

__all__ = ["get_logger", "log_run_step", "get_run_id", "set_run_id", "clear_run_id"]
