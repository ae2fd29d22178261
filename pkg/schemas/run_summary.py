"""Run summary and sweep row schemas: machine-readable results of simulate and sweep."""

from __future__ import annotations

from typing import Any

from pydantic import BaseModel, Field

from schemas.equilibrium import EquilibriumResult


class RunSummary(BaseModel):
    """
    Summary of one simulation run against the oracle (when one applies).

    Component errors are measured on rational players only; stubborn players are listed separately.
    wall_time_s and run_id are the only non-deterministic fields.
    """

    scenario: str
    strategy: str
    run_id: str | None = None
    stop_reason: str
    steps: int
    final_time: float
    final_l: list[float]
    final_aggregate: float
    final_eta: list[float] | None = Field(None, description="Recovered multipliers (primal-dual runs).")
    oracle: EquilibriumResult | None = None
    oracle_note: str | None = Field(None, description="Why no oracle is reported, when absent.")
    component_errors: list[float | None] | None = Field(
        None, description="|l_final - l*| per player; None for stubborn players."
    )
    max_component_error: float | None = None
    stubborn_players: list[int] = Field(default_factory=list)
    consensus_error: float = Field(..., description="max_i |D_i - sum_j l_j| at the final state.")
    kappa_drift: float = Field(..., description="|1'kappa(end) - 1'kappa(0)|.")
    final_residual: float
    fiedler_value: float
    assumption_checks: dict[str, Any] = Field(default_factory=dict)
    wall_time_s: float


class SweepRow(BaseModel):
    """One sweep member: parameter value, how the run ended and how close it got."""

    value: str
    stop_reason: str | None = None
    final_error: float | None = Field(None, description="Max component error vs oracle, else final residual.")
    convergence_time: float | None = Field(None, description="Simulated time at termination when CONVERGED.")
    run_dir: str
    error: str | None = Field(None, description="Failure message when the run raised.")

    @property
    def failed(self) -> bool:
        return self.error is not None or self.stop_reason in ("DIVERGED", "NUMERIC_FAILURE")
