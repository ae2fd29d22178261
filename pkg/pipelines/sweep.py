"""Parameter sweep: one simulation per value, run in a process pool, one output directory per value."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any

from config import settings
from errors import ScenarioValidationError, Violation
from integrators import StopReason
from observability import get_logger, log_run_step
from pipelines.simulation import run_simulation
from scenarios.loader import parse_scenario, serialize_scenario
from schemas.run_summary import SweepRow
from schemas.scenario import Scenario

logger = get_logger("pipelines.sweep")

SWEEP_PARAMETERS = ("delta", "step_h", "topology", "gain_k_all")


def _apply(data: dict[str, Any], param: str, raw: str) -> None:
    if param == "topology":
        data["graph"] = {"topology": raw}
        return
    try:
        value = float(raw)
    except ValueError as e:
        raise ScenarioValidationError([Violation("values", f"{param} expects a number, got {raw!r}")]) from e
    if param == "delta":
        data["delta"] = value
    elif param == "step_h":
        data.setdefault("integrator", {})["step_h"] = value
    else:
        for player in data["players"]:
            player["gain_k"] = value


def sweep_member(scenario: Scenario, param: str, value: str) -> Scenario:
    """Scenario with one parameter replaced, re-validated as a whole."""
    if param not in SWEEP_PARAMETERS:
        raise ScenarioValidationError(
            [Violation("param", f"unknown sweep parameter {param!r}; expected one of {list(SWEEP_PARAMETERS)}")]
        )
    data = json.loads(serialize_scenario(scenario))
    _apply(data, param, value)
    data["name"] = f"{scenario.name}-{param}={value}"
    return parse_scenario(json.dumps(data))


def _run_member(scenario_json: str, value: str, run_dir: str) -> SweepRow:
    """Worker entry point; takes the scenario as JSON."""
    try:
        result = run_simulation(parse_scenario(scenario_json), run_dir)
    except Exception as e:  # noqa: BLE001
        return SweepRow(value=value, run_dir=run_dir, error=f"{type(e).__name__}: {e}")
    summary = result.summary
    final_error = (
        summary.max_component_error if summary.max_component_error is not None else summary.final_residual
    )
    return SweepRow(
        value=value,
        stop_reason=summary.stop_reason,
        final_error=final_error,
        convergence_time=summary.final_time if summary.stop_reason == StopReason.CONVERGED.value else None,
        run_dir=run_dir,
    )


def run_sweep(
    scenario: Scenario,
    param: str,
    values: list[str],
    out_dir: str | Path,
    *,
    workers: int | None = None,
) -> list[SweepRow]:
    """
    Run scenario once per value of param into out_dir/<param>=<value>.

    Members are validated up front; rows come back in the order of values. workers=1 runs inline.
    """
    if not values:
        raise ScenarioValidationError([Violation("values", "sweep needs at least one value")])
    repeated = sorted({v for v in values if values.count(v) > 1})
    if repeated:
        raise ScenarioValidationError(
            [Violation("values", f"duplicate sweep values {repeated}; each run needs its own directory")]
        )
    members = [sweep_member(scenario, param, v) for v in values]
    base = Path(out_dir)
    jobs = [(serialize_scenario(m), v, str(base / f"{param}={v}")) for m, v in zip(members, values)]
    workers = workers if workers is not None else settings.sweep_workers
    log_run_step(logger, "sweep", "start", {"param": param, "values": values, "workers": workers})
    if workers <= 1:
        rows = [_run_member(*job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as pool:
            rows = list(pool.map(_run_member, *zip(*jobs)))
    failed = sum(1 for r in rows if r.failed)
    log_run_step(logger, "sweep", "done", {"runs": len(rows), "failed": failed})
    return rows
