"""Tests for the simulation and sweep pipelines and the service layer. Short horizons or coarse steps keep them fast."""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np
import pytest

from errors import ModelNotPotentialError, ScenarioValidationError
from observability import get_run_id
from pipelines import oracle_for, run_simulation, run_sweep, sweep_member
from scenarios import load_bundled, parse_scenario, serialize_scenario
from schemas.run_summary import RunSummary
from schemas.scenario import Scenario
from services import SimulationService


def _with(scenario: Scenario, **changes) -> Scenario:
    """Copy of a scenario with top-level or integrator fields replaced, re-validated."""
    doc = json.loads(serialize_scenario(scenario))
    integrator = {k: changes.pop(k) for k in list(changes) if k in ("step_h", "t_max", "sample_every", "stop_tol")}
    doc.setdefault("integrator", {}).update(integrator)
    doc.update(changes)
    return parse_scenario(json.dumps(doc))


def _general_scenario() -> Scenario:
    player = {"l_hat": 0.0, "l_min": 0.0, "l_max": 20.0, "v_coeffs": [0.0, -10.0, 1.0]}
    doc = {
        "name": "general_three",
        "players": [player] * 3,
        "pricing": {"p_coeffs": [1.0, 0.1, 0.01]},
        "strategy": "general",
        "delta": 0.2,
        "integrator": {"step_h": 0.01, "t_max": 500.0},
    }
    return parse_scenario(json.dumps(doc))


def test_oracle_choice_per_mode(table1_inner, table1_constrained, table1_stubborn) -> None:
    assert oracle_for(table1_inner)[0].method == "inner"
    assert oracle_for(table1_constrained)[0].method == "constrained"
    assert oracle_for(table1_stubborn)[0].method == "stubborn"
    result, note = oracle_for(_general_scenario())
    assert result is None and note


def test_horizon_limited_run_reports_errors_as_is(tmp_path: Path, table1_inner: Scenario) -> None:
    scenario = _with(table1_inner, t_max=1.0)
    result = run_simulation(scenario, tmp_path)
    s = result.summary
    assert s.stop_reason == "HORIZON"
    assert s.final_time == pytest.approx(1.0)
    assert s.max_component_error is not None and s.max_component_error > 0.05
    assert len(s.component_errors) == 5
    assert s.fiedler_value == pytest.approx(1.381966, abs=1e-6)
    assert s.run_id and s.run_id.startswith("table1_inner-")
    assert get_run_id() == s.run_id
    written = RunSummary.model_validate_json((tmp_path / "summary.json").read_text(encoding="utf-8"))
    assert written.final_l == s.final_l
    assert (tmp_path / "trajectory.csv").exists()


def test_zero_iteration_run_echoes_initial_state(tmp_path: Path, table1_constrained: Scenario) -> None:
    result = run_simulation(_with(table1_constrained, t_max=0.0), tmp_path)
    s = result.summary
    assert s.stop_reason == "HORIZON"
    assert s.steps == 0
    assert s.final_l == [50.0, 55.0, 60.0, 65.0, 70.0]
    assert s.final_eta == [1.0] * 10


def test_stubborn_summary_flags_stubborn_components(tmp_path: Path, table1_stubborn: Scenario) -> None:
    s = run_simulation(_with(table1_stubborn, t_max=1.0), tmp_path).summary
    assert s.stubborn_players == [4]
    assert s.component_errors[4] is None
    assert s.max_component_error == max(e for e in s.component_errors if e is not None)
    assert s.final_l[4] == 100.0


def test_general_run_converges_with_assumption_checks(tmp_path: Path) -> None:
    """No oracle for a non-potential game: stationarity residual and dominance of B are reported instead."""
    s = run_simulation(_general_scenario(), tmp_path).summary
    assert s.stop_reason == "CONVERGED"
    assert s.oracle is None and s.oracle_note
    assert s.assumption_checks["stationarity_residual"] < 1e-6
    assert s.assumption_checks["B_diagonally_dominant"] is True
    assert s.assumption_checks["second_order_condition"] is True
    assert s.assumption_checks["local_stability"] is True


def test_run_artifacts_are_deterministic(tmp_path: Path, table1_constrained: Scenario) -> None:
    scenario = _with(table1_constrained, t_max=2.0, sample_every=50)
    run_simulation(scenario, tmp_path / "a")
    run_simulation(scenario, tmp_path / "b")
    assert (tmp_path / "a" / "trajectory.csv").read_bytes() == (tmp_path / "b" / "trajectory.csv").read_bytes()
    sa = json.loads((tmp_path / "a" / "summary.json").read_text(encoding="utf-8"))
    sb = json.loads((tmp_path / "b" / "summary.json").read_text(encoding="utf-8"))
    for volatile in ("wall_time_s", "run_id"):
        sa.pop(volatile)
        sb.pop(volatile)
    assert sa == sb


def test_summary_multipliers_positive_with_wide_upper_box(tmp_path: Path, table1_constrained: Scenario) -> None:
    """Upper multipliers whose log sits far below the double range still report eta > 0."""
    doc = json.loads(serialize_scenario(table1_constrained))
    doc["players"][4]["l_max"] = 200.0
    doc["init"] = {"zeta": [0.0] * 5 + [-3000.0] * 5}
    doc["integrator"] = {"t_max": 2.0, "sample_every": 50}
    result = run_simulation(parse_scenario(json.dumps(doc)), tmp_path)
    assert result.summary.stop_reason == "HORIZON"
    assert all(e > 0 for e in result.summary.final_eta)
    written = RunSummary.model_validate_json((tmp_path / "summary.json").read_text(encoding="utf-8"))
    assert all(e > 0 for e in written.final_eta)
    for x in result.trajectory.states:
        assert np.all(result.dynamics.layout.unpack(x).eta > 0)


def test_sweep_member_replaces_one_parameter(table1_inner: Scenario) -> None:
    assert sweep_member(table1_inner, "delta", "0.1").delta == 0.1
    assert sweep_member(table1_inner, "step_h", "0.002").integrator.step_h == 0.002
    assert sweep_member(table1_inner, "topology", "path").graph.topology == "path"
    assert all(p.gain_k == 2.0 for p in sweep_member(table1_inner, "gain_k_all", "2").players)
    with pytest.raises(ScenarioValidationError):
        sweep_member(table1_inner, "colour", "red")
    with pytest.raises(ScenarioValidationError):
        sweep_member(table1_inner, "delta", "fast")
    with pytest.raises(ScenarioValidationError):
        sweep_member(table1_inner, "delta", "-1")


def test_sweep_rejects_empty_values(tmp_path: Path, table1_inner: Scenario) -> None:
    with pytest.raises(ScenarioValidationError):
        run_sweep(table1_inner, "delta", [], tmp_path)


def test_sweep_artifacts_do_not_depend_on_worker_count(tmp_path: Path, table1_constrained: Scenario) -> None:
    """Inline and pooled sweeps write byte-identical trajectories for every member."""
    short = _with(table1_constrained, t_max=2.0, sample_every=50)
    values = ["0.05", "0.1", "0.2"]
    inline = run_sweep(short, "delta", values, tmp_path / "inline", workers=1)
    pooled = run_sweep(short, "delta", values, tmp_path / "pooled", workers=2)
    assert [r.value for r in inline] == [r.value for r in pooled] == values
    for a, b in zip(inline, pooled):
        assert not a.failed and not b.failed
        assert a.run_dir != b.run_dir
        csv_a = (Path(a.run_dir) / "trajectory.csv").read_bytes()
        csv_b = (Path(b.run_dir) / "trajectory.csv").read_bytes()
        assert csv_a == csv_b


def test_sweep_rejects_duplicate_values(tmp_path: Path, table1_inner: Scenario) -> None:
    """Each member gets its own output directory, so a repeated value is a validation error."""
    with pytest.raises(ScenarioValidationError) as exc:
        run_sweep(table1_inner, "delta", ["0.1", "0.2", "0.1"], tmp_path, workers=1)
    assert any(v.field == "values" for v in exc.value.violations)
    assert not any(tmp_path.iterdir())


def test_delta_sweep_error_does_not_grow_as_delta_shrinks(tmp_path: Path, table1_inner: Scenario) -> None:
    """Every member converges; smaller delta never ends farther from the oracle (beyond solver noise)."""
    coarse = _with(table1_inner, step_h=0.01)
    rows = run_sweep(coarse, "delta", ["0.2", "0.1", "0.05", "0.025"], tmp_path, workers=2)
    assert [r.value for r in rows] == ["0.2", "0.1", "0.05", "0.025"]
    assert all(r.stop_reason == "CONVERGED" and not r.failed for r in rows)
    errors = [r.final_error for r in rows]
    assert all(e < 0.05 for e in errors)
    for prev, nxt in zip(errors, errors[1:]):
        assert nxt <= prev + 1e-6
    times = [r.convergence_time for r in rows]
    assert times == sorted(times)
    for r in rows:
        assert (Path(r.run_dir) / "summary.json").exists()
        assert Path(r.run_dir).name == f"delta={r.value}"


def test_topology_sweep_reaches_same_profile(tmp_path: Path, table1_inner: Scenario) -> None:
    coarse = _with(table1_inner, step_h=0.01)
    rows = run_sweep(coarse, "topology", ["ring", "complete", "path"], tmp_path, workers=1)
    finals = [
        np.array(json.loads((Path(r.run_dir) / "summary.json").read_text(encoding="utf-8"))["final_l"])
        for r in rows
    ]
    for f in finals[1:]:
        assert np.max(np.abs(f - finals[0])) < 0.01


def test_sweep_records_failed_member(tmp_path: Path, table1_inner: Scenario) -> None:
    """An unstable step size diverges; the row is marked failed and the sweep still returns."""
    rows = run_sweep(_with(table1_inner, t_max=50.0), "step_h", ["1.0"], tmp_path, workers=1)
    assert rows[0].failed
    assert rows[0].stop_reason in ("DIVERGED", "NUMERIC_FAILURE")


def test_service_check_and_solve(table1_inner, table1_constrained) -> None:
    service = SimulationService()
    report = service.check(table1_inner)
    assert report.ok
    assert report.connected
    assert report.uniqueness_margin == pytest.approx(0.96)
    assert report.h_positive_definite and report.h_diagonally_dominant and report.b_diagonally_dominant
    result, verification = service.solve(table1_constrained, verify=True)
    assert result.method == "constrained"
    assert verification is not None and verification.ok
    with pytest.raises(ModelNotPotentialError):
        service.solve(_general_scenario())


def test_service_check_general_model() -> None:
    report = SimulationService().check(_general_scenario())
    assert report.uniqueness_margin is None
    assert report.h_positive_definite is None
    assert report.ok
