"""Inner-equilibrium seeking law for the HVAC game, plus its quasi-steady-state reduction."""

from __future__ import annotations

import numpy as np

from dynamics.base import SeekingDynamics
from games.potential import gradient_Q
from graph.core import Graph
from schemas.game import GameSpec


class InnerSeekingDynamics(SeekingDynamics):
    """dl_i = -delta k_i [2 w_i (l_i - l_hat_i) + P(D_i) + a l_i]; valid when no bound binds."""

    name = "inner"
    requires_potential = True

    def __init__(self, spec: GameSpec, graph: Graph, delta: float) -> None:
        super().__init__(spec, graph, delta)
        self._two_w = 2.0 * np.array([p.w for p in spec.players])
        self._a = float(spec.pricing.a)  # type: ignore[arg-type]
        self._p0 = float(spec.pricing.p0)  # type: ignore[arg-type]

    def _bracket(self, l: np.ndarray, D: np.ndarray, zeta: np.ndarray | None) -> np.ndarray:
        return self._two_w * (l - self._l_hat) + self._a * D + self._p0 + self._a * l


def reduced_inner_rhs(spec: GameSpec, l: np.ndarray, delta: float) -> np.ndarray:
    """INNER action flow with every estimate replaced by the true aggregate: -delta k * grad Q(l)."""
    k = np.array([p.gain_k for p in spec.players])
    return -delta * k * gradient_Q(spec, l)
