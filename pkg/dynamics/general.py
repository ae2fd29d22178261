"""General seeking law for any polynomial cost model: dl_i = -delta k_i [V_i'(l_i) + P(D_i) + l_i P'(D_i)]."""

from __future__ import annotations

import numpy as np

from dynamics.base import SeekingDynamics
from graph.core import Graph
from schemas.game import GameSpec


class GeneralSeekingDynamics(SeekingDynamics):
    """Consensus-based seeking without constraints; local convergence near a stable isolated equilibrium."""

    name = "general"

    def __init__(self, spec: GameSpec, graph: Graph, delta: float) -> None:
        super().__init__(spec, graph, delta)
        self._p = self.model.p
        self._dp = self.model.dp

    def _bracket(self, l: np.ndarray, D: np.ndarray, zeta: np.ndarray | None) -> np.ndarray:
        return self.model.v_prime(l) + self._p(D) + l * self._dp(D)
