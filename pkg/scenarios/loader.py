"""Scenario JSON parsing with full violation reporting, bundled golden scenarios and serialization."""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from pydantic import ValidationError

from errors import (
    IndexOutOfRangeError,
    ScenarioParseError,
    ScenarioValidationError,
    SelfLoopError,
    Violation,
)
from games.conditions import check_uniqueness_condition, uniqueness_bound
from graph.core import is_connected
from graph.topology import build_from_spec
from schemas.scenario import Scenario, StrategyMode

GOLDEN_DIR = "golden"


def _loc(loc: tuple[int | str, ...]) -> str:
    return ".".join(str(part) for part in loc) or "<root>"


def _schema_violations(err: ValidationError) -> list[Violation]:
    return [Violation(field=_loc(e["loc"]), message=e["msg"]) for e in err.errors()]


def _graph_violations(scenario: Scenario) -> list[Violation]:
    n = len(scenario.players)
    out: list[Violation] = []
    for k, (i, j) in enumerate(scenario.graph.edges or []):
        if not (0 <= i < n and 0 <= j < n):
            out.append(Violation(f"graph.edges.{k}", f"edge ({i}, {j}) references a player outside [0, {n})"))
        elif i == j:
            out.append(Violation(f"graph.edges.{k}", f"self-loop on player {i}"))
    if out:
        return out
    try:
        g = build_from_spec(scenario.graph, n)
    except (IndexOutOfRangeError, SelfLoopError) as e:
        return [Violation("graph", str(e))]
    if not is_connected(g):
        out.append(Violation("graph", "graph not connected"))
    return out


def _model_violations(scenario: Scenario) -> list[Violation]:
    game = scenario.game
    out: list[Violation] = []
    if scenario.strategy is not StrategyMode.GENERAL and not game.is_hvac:
        out.append(
            Violation(
                "strategy",
                f"{scenario.strategy.value} requires the HVAC model (linear pricing, no v_coeffs)",
            )
        )
    if game.is_hvac and not check_uniqueness_condition(game):
        out.append(
            Violation(
                "pricing.a",
                f"uniqueness bound violated: a={game.pricing.a} must be < {uniqueness_bound(game):.6g}",
            )
        )
    return out


def _init_violations(scenario: Scenario) -> list[Violation]:
    n = len(scenario.players)
    init = scenario.init
    out: list[Violation] = []
    for name in ("l", "D", "kappa"):
        values = getattr(init, name)
        if values is not None and len(values) != n:
            out.append(Violation(f"init.{name}", f"expected {n} values, got {len(values)}"))
    if init.zeta is not None:
        if scenario.strategy is not StrategyMode.PRIMAL_DUAL:
            out.append(Violation("init.zeta", "log-multipliers are only used by the primal_dual strategy"))
        elif len(init.zeta) != 2 * n:
            out.append(Violation("init.zeta", f"expected {2 * n} values, got {len(init.zeta)}"))
    return out


def validate_scenario(scenario: Scenario) -> list[Violation]:
    """Cross-field checks; returns every violation found (empty when valid)."""
    return _graph_violations(scenario) + _model_violations(scenario) + _init_violations(scenario)


def parse_scenario(text: str) -> Scenario:
    """
    Parse and fully validate a scenario JSON document.

    Raises ScenarioParseError for malformed JSON and ScenarioValidationError listing
    every schema and cross-field violation.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ScenarioParseError(f"scenario is not valid JSON: {e}") from e
    try:
        scenario = Scenario.model_validate(data)
    except ValidationError as e:
        raise ScenarioValidationError(_schema_violations(e)) from e
    violations = validate_scenario(scenario)
    if violations:
        raise ScenarioValidationError(violations)
    return scenario


def serialize_scenario(scenario: Scenario) -> str:
    """JSON document that parses back to an equal Scenario."""
    return scenario.model_dump_json(indent=2, exclude_none=True)


def load_scenario(path: str | Path) -> Scenario:
    return parse_scenario(Path(path).read_text(encoding="utf-8"))


def bundled_names() -> list[str]:
    """Names of the golden scenarios shipped with the package."""
    root = resources.files("scenarios").joinpath(GOLDEN_DIR)
    return sorted(p.name[: -len(".json")] for p in root.iterdir() if p.name.endswith(".json"))


def load_bundled(name: str) -> Scenario:
    resource = resources.files("scenarios").joinpath(GOLDEN_DIR, f"{name}.json")
    if not resource.is_file():
        raise FileNotFoundError(f"No bundled scenario named {name!r}. Available: {bundled_names()}")
    return parse_scenario(resource.read_text(encoding="utf-8"))


def resolve_scenario(ref: str | Path) -> Scenario:
    """Load a scenario from a file path, or by bundled name when no such file exists."""
    path = Path(ref)
    if path.exists():
        return load_scenario(path)
    if str(ref) in bundled_names():
        return load_bundled(str(ref))
    raise FileNotFoundError(f"Scenario {str(ref)!r} is neither a file nor a bundled name {bundled_names()}")
