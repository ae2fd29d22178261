"""Simulation pipeline: scenario -> graph + dynamics -> oracle -> integrate -> series -> summary -> artifacts."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import numpy as np

from config import settings
from dynamics import SeekingDynamics, get_dynamics
from errors import ModelNotPotentialError, NotInnerError
from games.conditions import (
    is_strictly_diagonally_dominant,
    local_stability,
    second_order_condition,
    uniqueness_margin,
)
from games.cost_model import jacobian_B, pseudo_gradient_vector
from graph.core import Graph, fiedler_value
from graph.topology import build_from_spec
from integrators import Trajectory, integrate
from observability import get_logger, log_run_step, set_run_id
from oracle import constrained_equilibrium, inner_equilibrium, stubborn_equilibrium
from schemas.equilibrium import EquilibriumResult
from schemas.game import GameSpec
from schemas.run_summary import RunSummary
from schemas.scenario import Scenario, StrategyMode
from storage import write_summary, write_trajectory

logger = get_logger("pipelines.simulation")


@dataclass
class SimulationResult:
    """Everything one run produced; paths are None when artifacts were not written."""

    summary: RunSummary
    trajectory: Trajectory
    dynamics: SeekingDynamics
    trajectory_path: Path | None = None
    summary_path: Path | None = None


def oracle_for(scenario: Scenario) -> tuple[EquilibriumResult | None, str | None]:
    """
    Reference equilibrium for a run: stubborn players -> stubborn_equilibrium, INNER -> inner,
    PRIMAL_DUAL -> constrained, GENERAL -> none. Returns (result, note) with a note when absent.
    """
    game = scenario.game
    try:
        if game.stubborn_indices:
            return stubborn_equilibrium(game), None
        if scenario.strategy is StrategyMode.INNER:
            return inner_equilibrium(game), None
        if scenario.strategy is StrategyMode.PRIMAL_DUAL:
            return constrained_equilibrium(game), None
    except NotInnerError as e:
        return None, str(e)
    except ModelNotPotentialError as e:
        return None, str(e)
    return None, "no oracle for the general strategy; see assumption_checks"


def _general_checks(game: GameSpec, l: np.ndarray, dyn: SeekingDynamics) -> dict[str, Any]:
    """Stationarity and local conditions at the terminal point of a GENERAL run."""
    rational = game.rational_indices
    grad = pseudo_gradient_vector(dyn.model, l, np.full(l.size, l.sum()))
    b = jacobian_B(game, l)
    return {
        "stationarity_residual": float(np.max(np.abs(grad[rational]))) if rational else 0.0,
        "second_order_condition": second_order_condition(game, l),
        "B_diagonally_dominant": is_strictly_diagonally_dominant(b),
        "local_stability": local_stability(game, l),
    }


def summarize(
    scenario: Scenario,
    graph: Graph,
    dyn: SeekingDynamics,
    traj: Trajectory,
    oracle: EquilibriumResult | None,
    oracle_note: str | None,
    run_id: str | None,
) -> RunSummary:
    game = scenario.game
    final = dyn.layout.unpack(traj.final_state)
    initial = dyn.layout.unpack(traj.states[0])
    component_errors: list[float | None] | None = None
    max_error: float | None = None
    if oracle is not None:
        l_star = np.array(oracle.l_star)
        errs = np.abs(final.l - l_star)
        component_errors = [None if p.is_stubborn else float(errs[i]) for i, p in enumerate(game.players)]
        rational = [e for e in component_errors if e is not None]
        max_error = max(rational) if rational else 0.0
    checks: dict[str, Any] = {}
    if game.is_hvac:
        checks["uniqueness_margin"] = uniqueness_margin(game)
    if scenario.strategy is StrategyMode.GENERAL:
        checks.update(_general_checks(game, final.l, dyn))
    return RunSummary(
        scenario=scenario.name,
        strategy=scenario.strategy.value,
        run_id=run_id,
        stop_reason=traj.stop_reason.value,
        steps=traj.steps,
        final_time=traj.final_time,
        final_l=final.l.tolist(),
        final_aggregate=final.aggregate,
        final_eta=None if final.eta is None else final.eta.tolist(),
        oracle=oracle,
        oracle_note=oracle_note,
        component_errors=component_errors,
        max_component_error=max_error,
        stubborn_players=game.stubborn_indices,
        consensus_error=float(np.max(np.abs(final.D - final.aggregate))),
        kappa_drift=float(abs(final.kappa.sum() - initial.kappa.sum())),
        final_residual=traj.final_residual,
        fiedler_value=fiedler_value(graph),
        assumption_checks=checks,
        wall_time_s=traj.wall_time_s,
    )


def run_simulation(
    scenario: Scenario,
    out_dir: str | Path | None = None,
    *,
    write_artifacts: bool = True,
    run_id: str | None = None,
    after_integrate: Callable[[Trajectory], None] | None = None,
) -> SimulationResult:
    """
    Run one scenario end to end.

    out_dir defaults to <settings.output_dir>/<scenario name>. after_integrate(traj) is an
    optional hook for inspection before the summary is built.
    """
    run_id = set_run_id(run_id, prefix=scenario.name)
    game = scenario.game
    graph = build_from_spec(scenario.graph, game.n)
    dyn = get_dynamics(scenario.strategy, game, graph, scenario.delta)
    log_run_step(logger, "simulation", "start", {"strategy": scenario.strategy.value, "n": game.n})

    oracle, note = oracle_for(scenario)
    log_run_step(
        logger, "simulation", "oracle", {"method": oracle.method if oracle else None, "note": note}
    )

    traj = integrate(dyn.rhs, dyn.initial_state(scenario.init), scenario.integrator, residual=dyn.residual)
    traj.series = dyn.series(traj.states)
    if after_integrate is not None:
        after_integrate(traj)

    summary = summarize(scenario, graph, dyn, traj, oracle, note, run_id)
    result = SimulationResult(summary=summary, trajectory=traj, dynamics=dyn)
    if write_artifacts:
        directory = Path(out_dir) if out_dir is not None else Path(settings.output_dir) / scenario.name
        if scenario.output.write_trajectory:
            result.trajectory_path = directory / scenario.output.trajectory_file
            rows = write_trajectory(traj, result.trajectory_path)
            log_run_step(logger, "simulation", "trajectory_written", {"path": str(result.trajectory_path), "rows": rows})
        result.summary_path = write_summary(summary, directory / scenario.output.summary_file)
    log_run_step(
        logger,
        "simulation",
        "done",
        {"stop_reason": summary.stop_reason, "max_component_error": summary.max_component_error},
    )
    return result
