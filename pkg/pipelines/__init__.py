"""Simulation and sweep pipelines."""

from pipelines.simulation import SimulationResult, oracle_for, run_simulation, summarize
from pipelines.sweep import SWEEP_PARAMETERS, run_sweep, sweep_member

__all__ = [
    "SimulationResult",
    "run_simulation",
    "oracle_for",
    "summarize",
    "run_sweep",
    "sweep_member",
    "SWEEP_PARAMETERS",
]
