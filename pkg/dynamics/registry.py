"""Strategy registry: mode name -> seeking dynamics class."""

from __future__ import annotations

from dynamics.base import SeekingDynamics
from errors import UnknownStrategyError
from graph.core import Graph
from schemas.game import GameSpec
from schemas.scenario import StrategyMode

_registry: dict[str, type[SeekingDynamics]] = {}


def register_strategy(name: str, dynamics_class: type[SeekingDynamics]) -> None:
    """Register a seeking dynamics class under the given mode name."""
    _registry[name] = dynamics_class


def get_dynamics(mode: StrategyMode | str, spec: GameSpec, graph: Graph, delta: float) -> SeekingDynamics:
    """Return a dynamics instance for the given mode."""
    name = mode.value if isinstance(mode, StrategyMode) else str(mode)
    if name not in _registry:
        raise UnknownStrategyError(f"Unknown strategy: {name}. Registered: {list(_registry)}")
    return _registry[name](spec, graph, delta)


def list_strategies() -> list[str]:
    return list(_registry)
