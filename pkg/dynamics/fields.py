"""Functional entry points: one vector-field evaluation on a SimState, per strategy."""

from __future__ import annotations

from dynamics.registry import get_dynamics
from dynamics.state import SimState
from graph.core import Graph
from schemas.game import GameSpec
from schemas.scenario import StrategyMode


def _evaluate(mode: StrategyMode, spec: GameSpec, g: Graph, state: SimState, delta: float) -> SimState:
    dyn = get_dynamics(mode, spec, g, delta)
    return dyn.derivative(state)


def general_rhs(spec: GameSpec, g: Graph, state: SimState, delta: float) -> SimState:
    return _evaluate(StrategyMode.GENERAL, spec, g, state, delta)


def primal_dual_rhs(spec: GameSpec, g: Graph, state: SimState, delta: float) -> SimState:
    return _evaluate(StrategyMode.PRIMAL_DUAL, spec, g, state, delta)


def inner_rhs(spec: GameSpec, g: Graph, state: SimState, delta: float) -> SimState:
    return _evaluate(StrategyMode.INNER, spec, g, state, delta)


def residual(spec: GameSpec, g: Graph, state: SimState, mode: StrategyMode | str) -> float:
    """Norm of the full derivative at delta = 1."""
    dyn = get_dynamics(mode, spec, g, 1.0)
    return dyn.residual(dyn.layout.pack(state))
