"""Structured logging for pipelines and services."""

from __future__ import annotations

import logging
import sys
from typing import Any

from config import settings
from observability.tracing import get_run_id


def get_logger(name: str) -> logging.Logger:
    """Return a logger for the given module/component. Uses app log level from settings.

    Logs go to stderr; stdout is reserved for the CLI report.
    """
    logger = logging.getLogger(name)
    if not logger.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(
            logging.Formatter(
                "%(asctime)s | %(levelname)s | %(name)s | %(message)s"
            )
        )
        logger.addHandler(handler)
        logger.setLevel(getattr(logging, settings.log_level.upper(), logging.INFO))
    return logger


def log_run_step(
    logger: logging.Logger,
    component: str,
    step: str,
    details: dict[str, Any] | None = None,
    run_id: str | None = None,
) -> None:
    """Log one step of a simulation run (start, oracle, integrate, write)."""
    msg = f"run_step | component={component} | step={step}"
    run_id = run_id if run_id is not None else get_run_id()
    if run_id is not None:
        msg += f" | run_id={run_id}"
    if details is not None:
        msg += f" | details={details!r}"
    logger.info(msg)
