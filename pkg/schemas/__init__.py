"""Shared Pydantic models: game, scenario, oracle results and run reports."""

from schemas.game import GameSpec, PlayerSpec, PricingSpec
from schemas.scenario import (
    GraphSpec,
    InitialConditions,
    IntegratorConfig,
    OutputOptions,
    Scenario,
    StrategyMode,
)
from schemas.equilibrium import EquilibriumResult, NashVerification
from schemas.run_summary import RunSummary, SweepRow
from schemas.check_report import CheckReport

__all__ = [
    "PlayerSpec",
    "PricingSpec",
    "GameSpec",
    "GraphSpec",
    "IntegratorConfig",
    "InitialConditions",
    "OutputOptions",
    "Scenario",
    "StrategyMode",
    "EquilibriumResult",
    "NashVerification",
    "RunSummary",
    "SweepRow",
    "CheckReport",
]
