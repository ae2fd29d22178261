"""Scenario schema: one simulation experiment with its game, graph, strategy, integrator and initial state."""

from __future__ import annotations

from enum import Enum
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from config.settings import settings
from schemas.game import GameSpec, PlayerSpec, PricingSpec


class StrategyMode(str, Enum):
    """Nash seeking law: general smooth game, primal-dual with box multipliers, or inner equilibrium."""

    GENERAL = "general"
    PRIMAL_DUAL = "primal_dual"
    INNER = "inner"


class GraphSpec(BaseModel):
    """Communication graph as a named topology or an explicit edge list (0-indexed)."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    topology: Literal["ring", "complete", "path"] | None = None
    edges: list[tuple[int, int]] | None = None

    @model_validator(mode="after")
    def _one_form(self) -> "GraphSpec":
        if (self.topology is None) == (self.edges is None):
            raise ValueError("give exactly one of topology or edges")
        return self


class IntegratorConfig(BaseModel):
    """Fixed-step RK4 settings. Times are in simulated-time units."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    step_h: float = Field(1e-3, gt=0, description="Step size.")
    t_max: float = Field(2000.0, ge=0, description="Horizon; 0 means a zero-iteration run.")
    sample_every: int = Field(100, ge=1, description="Sampling stride in steps; residual is checked at samples.")
    stop_tol: float = Field(1e-8, ge=0, description="Residual threshold for CONVERGED.")
    diverge_bound: float = Field(1e6, gt=0, description="State-norm threshold for DIVERGED.")


class InitialConditions(BaseModel):
    """Optional overrides; defaults are l = l_hat, D = 0, kappa = 0, zeta = 0 (eta = 1)."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    l: list[float] | None = None
    D: list[float] | None = None
    kappa: list[float] | None = None
    zeta: list[float] | None = None


class OutputOptions(BaseModel):
    """Artifact file names inside the run output directory."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    trajectory_file: str = "trajectory.csv"
    summary_file: str = "summary.json"
    write_trajectory: bool = True


class Scenario(BaseModel):
    """
    Validated simulation scenario.

    Field-level checks live here; cross-field checks (graph connectivity, edge indices,
    mode/model compatibility, uniqueness bound, init lengths) run in scenarios.loader so
    every violation is reported together.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    name: str = Field(..., min_length=1)
    players: list[PlayerSpec] = Field(..., min_length=1)
    pricing: PricingSpec
    graph: GraphSpec = Field(default_factory=lambda: GraphSpec(topology=settings.default_topology))
    strategy: StrategyMode
    delta: float = Field(0.05, gt=0, description="Time-scale separation parameter.")
    integrator: IntegratorConfig = Field(default_factory=IntegratorConfig)
    init: InitialConditions = Field(default_factory=InitialConditions)
    output: OutputOptions = Field(default_factory=OutputOptions)

    @property
    def game(self) -> GameSpec:
        return GameSpec(players=self.players, pricing=self.pricing)
