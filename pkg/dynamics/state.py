"""Stacked simulation state (l, D, kappa, zeta) and its flat-vector layout."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# log of the smallest positive normal double; exp never rounds to 0 above it
LOG_ETA_FLOOR = float(np.log(np.finfo(float).tiny))


def multipliers(zeta: np.ndarray) -> np.ndarray:
    """eta = exp(zeta), floored at the smallest positive double so it stays strictly positive."""
    return np.exp(np.maximum(zeta, LOG_ETA_FLOOR))


@dataclass(frozen=True)
class SimState:
    """
    One point of the seeking flow in original coordinates.

    zeta holds log-multipliers (lower block, then upper block) and is present only for
    primal-dual runs; eta = multipliers(zeta) is strictly positive for every reachable state.
    The same type carries time derivatives (then zeta holds d zeta/dt).
    """

    l: np.ndarray
    D: np.ndarray
    kappa: np.ndarray
    zeta: np.ndarray | None = None

    @property
    def eta(self) -> np.ndarray | None:
        return None if self.zeta is None else multipliers(self.zeta)

    @property
    def aggregate(self) -> float:
        return float(np.sum(self.l))


@dataclass(frozen=True)
class StateLayout:
    """Slices of the flat integrator vector: [l | D | kappa | zeta?]."""

    n: int
    has_multipliers: bool

    @property
    def size(self) -> int:
        return (5 if self.has_multipliers else 3) * self.n

    @property
    def l(self) -> slice:
        return slice(0, self.n)

    @property
    def D(self) -> slice:
        return slice(self.n, 2 * self.n)

    @property
    def kappa(self) -> slice:
        return slice(2 * self.n, 3 * self.n)

    @property
    def zeta(self) -> slice:
        return slice(3 * self.n, 5 * self.n)

    def pack(self, state: SimState) -> np.ndarray:
        parts = [state.l, state.D, state.kappa]
        if self.has_multipliers:
            if state.zeta is None:
                raise ValueError("layout expects log-multipliers but state has none")
            parts.append(state.zeta)
        x = np.concatenate([np.asarray(p, dtype=float) for p in parts])
        if x.size != self.size:
            raise ValueError(f"state has {x.size} entries, layout expects {self.size}")
        return x

    def unpack(self, x: np.ndarray) -> SimState:
        x = np.asarray(x, dtype=float)
        return SimState(
            l=x[self.l].copy(),
            D=x[self.D].copy(),
            kappa=x[self.kappa].copy(),
            zeta=x[self.zeta].copy() if self.has_multipliers else None,
        )
