"""Sampled trajectory of one integration run and why it stopped."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np


class StopReason(str, Enum):
    CONVERGED = "CONVERGED"
    HORIZON = "HORIZON"
    DIVERGED = "DIVERGED"
    NUMERIC_FAILURE = "NUMERIC_FAILURE"


@dataclass(frozen=True)
class TrajectorySeries:
    """Per-sample derived quantities; potential is None outside the HVAC model."""

    aggregate: np.ndarray
    estimates: np.ndarray
    prices: np.ndarray
    costs: np.ndarray
    potential: np.ndarray | None


@dataclass
class Trajectory:
    """
    Samples of the flat state vector.

    times are strictly increasing, states has one row per time, the first row is the
    initial condition and the last row is the final state whatever the sampling stride.
    """

    times: np.ndarray
    states: np.ndarray
    residuals: np.ndarray
    stop_reason: StopReason
    steps: int
    wall_time_s: float
    series: TrajectorySeries | None = None
    failure: str | None = None

    @property
    def final_state(self) -> np.ndarray:
        return self.states[-1]

    @property
    def final_time(self) -> float:
        return float(self.times[-1])

    @property
    def final_residual(self) -> float:
        return float(self.residuals[-1])

    def __len__(self) -> int:
        return int(self.times.size)
