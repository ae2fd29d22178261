"""Base seeking dynamics: shared consensus part, stubborn handling, residual, derived series."""

from __future__ import annotations

from abc import ABC, abstractmethod

import numpy as np

from dynamics.consensus import consensus_field
from dynamics.state import SimState, StateLayout, multipliers
from errors import ModelNotPotentialError, NonPositiveDeltaError, NotConnectedError
from games.cost_model import cost_model
from games.potential import potential
from graph.core import Graph, is_connected, laplacian
from integrators.trajectory import TrajectorySeries
from schemas.game import GameSpec
from schemas.scenario import InitialConditions


class SeekingDynamics(ABC):
    """
    Nash seeking law over the stacked state [l | D | kappa | zeta?].

    Strategy pattern: subclasses supply the bracket in dl_i = -delta k_i [bracket_i] and,
    for primal-dual, the multiplier rates. Stubborn players hold dl_i = 0 and drive the
    consensus estimator with N * l_s.
    """

    name: str = ""
    has_multipliers: bool = False
    requires_potential: bool = False

    def __init__(self, spec: GameSpec, graph: Graph, delta: float) -> None:
        if not delta > 0:
            raise NonPositiveDeltaError(f"delta must be > 0, got {delta}")
        if graph.n != spec.n:
            raise ValueError(f"graph has {graph.n} nodes but game has {spec.n} players")
        if not is_connected(graph):
            raise NotConnectedError("seeking dynamics require a connected graph")
        if self.requires_potential and not spec.is_hvac:
            raise ModelNotPotentialError(f"{self.name} strategy requires the HVAC model with linear pricing")
        self.spec = spec
        self.graph = graph
        self.delta = float(delta)
        self.n = spec.n
        self.layout = StateLayout(n=spec.n, has_multipliers=self.has_multipliers)
        self.model = cost_model(spec)
        self._lap = laplacian(graph)
        self._k = np.array([p.gain_k for p in spec.players])
        self._l_hat = np.array([p.l_hat for p in spec.players])
        self._l_min = np.array([p.l_min for p in spec.players])
        self._l_max = np.array([p.l_max for p in spec.players])
        self._stubborn = np.array([p.is_stubborn for p in spec.players])
        self._stubborn_values = np.array([p.stubborn if p.is_stubborn else 0.0 for p in spec.players])

    @abstractmethod
    def _bracket(self, l: np.ndarray, D: np.ndarray, zeta: np.ndarray | None) -> np.ndarray:
        """Seeking direction per player (before the -delta k scaling)."""
        ...

    def _multiplier_rates(self, l: np.ndarray, delta: float) -> np.ndarray:
        """d zeta/dt for strategies with multipliers; empty otherwise."""
        return np.empty(0)

    def drive(self, l: np.ndarray) -> np.ndarray:
        """Consensus input N*l, stubborn entries replaced by N*l_s."""
        return self.n * np.where(self._stubborn, self._stubborn_values, l)

    def field(self, x: np.ndarray, delta: float) -> np.ndarray:
        """Full state derivative at time-scale parameter delta."""
        n = self.n
        l, D, kappa = x[:n], x[n : 2 * n], x[2 * n : 3 * n]
        zeta = x[3 * n :] if self.has_multipliers else None
        dD, dkappa = consensus_field(self._lap, D, kappa, self.drive(l))
        dl = -delta * self._k * self._bracket(l, D, zeta)
        dl[self._stubborn] = 0.0
        if zeta is None:
            return np.concatenate([dl, dD, dkappa])
        return np.concatenate([dl, dD, dkappa, self._multiplier_rates(l, delta)])

    def rhs(self, x: np.ndarray) -> np.ndarray:
        """Vector field handed to the integrator."""
        return self.field(x, self.delta)

    def derivative(self, state: SimState) -> SimState:
        """Field evaluated on a SimState, returned as a SimState of rates."""
        return self.layout.unpack(self.field(self.layout.pack(state), self.delta))

    def residual(self, x: np.ndarray) -> float:
        """
        Norm of the state derivative at delta = 1 (threshold independent of delta).

        Multiplier rates are measured as d eta/dt = eta * d zeta/dt, which vanishes as an
        inactive multiplier decays to 0.
        """
        f = self.field(x, 1.0)
        if self.has_multipliers:
            zs = self.layout.zeta
            f[zs] = f[zs] * multipliers(x[zs])
        return float(np.linalg.norm(f))

    def initial_state(self, init: InitialConditions | None = None) -> np.ndarray:
        """Defaults l = l_hat, D = 0, kappa = 0, zeta = 0; stubborn actions pinned to l_s."""
        init = init or InitialConditions()
        n = self.n
        l = np.array(init.l, dtype=float) if init.l is not None else self._l_hat.copy()
        l = np.where(self._stubborn, self._stubborn_values, l)
        state = SimState(
            l=l,
            D=np.array(init.D, dtype=float) if init.D is not None else np.zeros(n),
            kappa=np.array(init.kappa, dtype=float) if init.kappa is not None else np.zeros(n),
            zeta=(
                (np.array(init.zeta, dtype=float) if init.zeta is not None else np.zeros(2 * n))
                if self.has_multipliers
                else None
            ),
        )
        return self.layout.pack(state)

    def series(self, states: np.ndarray) -> TrajectorySeries:
        """Derived per-sample series: aggregate, estimates, price, per-player cost, potential."""
        states = np.atleast_2d(states)
        l = states[:, self.layout.l]
        aggregate = l.sum(axis=1)
        prices = self.model.p(aggregate)
        curtailment = np.array([self.model.v_value(row) for row in l])
        costs = curtailment + prices[:, None] * l
        q = np.array([potential(self.spec, row) for row in l]) if self.spec.is_hvac else None
        return TrajectorySeries(
            aggregate=aggregate,
            estimates=states[:, self.layout.D].copy(),
            prices=prices,
            costs=costs,
            potential=q,
        )
