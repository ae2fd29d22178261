"""Simulation business orchestration. The CLI calls this; it delegates to oracle/, pipelines/ and scenarios/."""

from __future__ import annotations

import math
from pathlib import Path

import numpy as np

from config import settings
from errors import NotInnerError
from games.conditions import (
    is_positive_definite,
    is_strictly_diagonally_dominant,
    uniqueness_bound,
    uniqueness_margin,
)
from games.cost_model import jacobian_B
from games.potential import hessian_Q
from graph.core import fiedler_value, is_connected
from graph.topology import build_from_spec
from oracle import constrained_equilibrium, inner_equilibrium, stubborn_equilibrium, verify_nash
from pipelines.simulation import SimulationResult, run_simulation
from pipelines.sweep import run_sweep
from schemas.check_report import CheckReport
from schemas.equilibrium import EquilibriumResult, NashVerification
from schemas.run_summary import SweepRow
from schemas.scenario import Scenario, StrategyMode


class SimulationService:
    """Thin layer over the oracle and pipelines; one method per CLI command."""

    def __init__(self, *, output_dir: str | Path | None = None, sweep_workers: int | None = None) -> None:
        self.output_dir = Path(output_dir) if output_dir is not None else Path(settings.output_dir)
        self.sweep_workers = sweep_workers if sweep_workers is not None else settings.sweep_workers

    def check(self, scenario: Scenario) -> CheckReport:
        """Connectivity, Fiedler value, uniqueness margin, dominance of B and H, definiteness of H."""
        game = scenario.game
        graph = build_from_spec(scenario.graph, game.n)
        l_hat = np.array([p.l_hat for p in game.players])
        report = CheckReport(
            scenario=scenario.name,
            n_players=game.n,
            strategy=scenario.strategy.value,
            connected=is_connected(graph),
            fiedler_value=fiedler_value(graph),
            b_diagonally_dominant=is_strictly_diagonally_dominant(jacobian_B(game, l_hat)),
        )
        if game.is_hvac:
            bound = uniqueness_bound(game)
            h = hessian_Q(game)
            report = report.model_copy(
                update={
                    "uniqueness_bound": None if math.isinf(bound) else bound,
                    "uniqueness_margin": None if math.isinf(bound) else uniqueness_margin(game),
                    "h_diagonally_dominant": is_strictly_diagonally_dominant(h),
                    "h_positive_definite": is_positive_definite(h),
                }
            )
        return report

    def solve(
        self, scenario: Scenario, *, verify: bool = False
    ) -> tuple[EquilibriumResult, NashVerification | None]:
        """
        Oracle equilibrium of the scenario's game, independent of the dynamics.

        Stubborn players -> stubborn_equilibrium; INNER -> inner_equilibrium, falling back to the
        constrained solver when a bound binds; otherwise constrained_equilibrium. Non-HVAC games
        raise ModelNotPotentialError.
        """
        game = scenario.game
        if game.stubborn_indices:
            result = stubborn_equilibrium(game)
        elif scenario.strategy is StrategyMode.INNER:
            try:
                result = inner_equilibrium(game)
            except NotInnerError:
                result = constrained_equilibrium(game)
        else:
            result = constrained_equilibrium(game)
        verification = None
        if verify:
            verification = verify_nash(
                scenario.game, np.array(result.l_star), settings.verify_grid_points, settings.verify_eps
            )
        return result, verification

    def simulate(self, scenario: Scenario, out_dir: str | Path | None = None) -> SimulationResult:
        directory = Path(out_dir) if out_dir is not None else self.output_dir / scenario.name
        return run_simulation(scenario, directory)

    def sweep(
        self, scenario: Scenario, param: str, values: list[str], out_dir: str | Path | None = None
    ) -> list[SweepRow]:
        directory = Path(out_dir) if out_dir is not None else self.output_dir / f"{scenario.name}-sweep"
        return run_sweep(scenario, param, values, directory, workers=self.sweep_workers)
