"""Equilibrium oracle output schemas."""

from __future__ import annotations

from pydantic import BaseModel, Field


class EquilibriumResult(BaseModel):
    """
    Oracle-computed Nash equilibrium of the HVAC game.

    eta_star is laid out as [eta_11..eta_N1, eta_12..eta_N2] (lower-bound block, then upper-bound block).
    Complementary slackness: eta_i1 > 0 only if l_i = l_min, eta_i2 > 0 only if l_i = l_max.
    """

    l_star: list[float] = Field(..., description="Equilibrium action profile (kWh).")
    aggregate: float = Field(..., description="Sum of l_star (kWh).")
    eta_star: list[float] = Field(..., description="Box multipliers, lower block then upper block.")
    active_lower: list[int] = Field(default_factory=list, description="Players at their lower bound.")
    active_upper: list[int] = Field(default_factory=list, description="Players at their upper bound.")
    stationarity_residual: float = Field(..., description="Max over rational players of the KKT violation.")
    stubborn: list[int] = Field(default_factory=list, description="Players held at a fixed consumption.")
    method: str = Field(..., description="Solver used: inner, constrained, or stubborn.")
    sweeps: int | None = Field(None, description="Best-response sweeps used by the constrained solver.")


class NashVerification(BaseModel):
    """Outcome of the brute-force unilateral deviation scan."""

    ok: bool
    worst_improvement: float = Field(..., description="Largest cost decrease found by any deviation.")
    worst_player: int | None = Field(None, description="Player achieving worst_improvement.")
