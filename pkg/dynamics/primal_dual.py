"""Primal-dual seeking law for the box-constrained HVAC game, multipliers integrated in log space."""

from __future__ import annotations

import numpy as np

from dynamics.inner import InnerSeekingDynamics
from dynamics.state import multipliers
from graph.core import Graph
from schemas.game import GameSpec


class PrimalDualSeekingDynamics(InnerSeekingDynamics):
    """
    dl_i    = -delta k_i [2 w_i (l_i - l_hat_i) + P(D_i) + a l_i - eta_i1 + eta_i2]
    dzeta_i1 = delta m_i1 (l_min_i - l_i),  dzeta_i2 = delta m_i2 (l_i - l_max_i)

    With eta = exp(zeta) the second line is exactly d eta = delta m eta (gap). eta is read through
    multipliers(), which keeps it strictly positive once zeta falls below the double range.
    Stubborn players keep their multipliers frozen.
    """

    name = "primal_dual"
    has_multipliers = True

    def __init__(self, spec: GameSpec, graph: Graph, delta: float) -> None:
        super().__init__(spec, graph, delta)
        self._m1 = np.array([p.gain_m1 for p in spec.players])
        self._m2 = np.array([p.gain_m2 for p in spec.players])
        self._rational = ~self._stubborn

    def _bracket(self, l: np.ndarray, D: np.ndarray, zeta: np.ndarray | None) -> np.ndarray:
        eta = multipliers(zeta)  # type: ignore[arg-type]
        n = self.n
        return super()._bracket(l, D, None) - eta[:n] + eta[n:]

    def _multiplier_rates(self, l: np.ndarray, delta: float) -> np.ndarray:
        lower = delta * self._m1 * (self._l_min - l) * self._rational
        upper = delta * self._m2 * (l - self._l_max) * self._rational
        return np.concatenate([lower, upper])
