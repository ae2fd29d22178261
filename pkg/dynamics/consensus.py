"""Dynamic average consensus: each player's D_i tracks the aggregate sum_j l_j.

dD = -D - L D - L kappa + drive,   dkappa = L D,   drive = N * l

For constant drive and a connected graph, D converges exponentially to 1 * mean(drive) = 1 * sum l,
and 1'kappa is conserved.
"""

from __future__ import annotations

from collections.abc import Callable

import numpy as np

from errors import NotConnectedError
from graph.core import Graph, is_connected, laplacian


def consensus_field(
    lap: np.ndarray, D: np.ndarray, kappa: np.ndarray, drive: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Vector field of the estimator for a precomputed Laplacian."""
    lap_d = lap @ D
    return -D - lap_d - lap @ kappa + drive, lap_d


def consensus_rhs(
    g: Graph, D: np.ndarray, kappa: np.ndarray, drive: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """(dD, dkappa) on graph g. drive is N*l, with stubborn entries N*l_s."""
    if not is_connected(g):
        raise NotConnectedError("consensus requires a connected graph")
    return consensus_field(
        laplacian(g),
        np.asarray(D, dtype=float),
        np.asarray(kappa, dtype=float),
        np.asarray(drive, dtype=float),
    )


def consensus_matrix(g: Graph) -> np.ndarray:
    """Block matrix [[-I - L, -L], [L, 0]] acting on (D, kappa)."""
    lap = laplacian(g)
    eye = np.eye(g.n)
    return np.block([[-eye - lap, -lap], [lap, np.zeros_like(lap)]])


def frozen_consensus_rhs(g: Graph, l: np.ndarray) -> Callable[[np.ndarray], np.ndarray]:
    """Flow on the stacked (D, kappa) vector with actions held at l."""
    if not is_connected(g):
        raise NotConnectedError("consensus requires a connected graph")
    lap = laplacian(g)
    drive = g.n * np.asarray(l, dtype=float)
    n = g.n

    def rhs(x: np.ndarray) -> np.ndarray:
        dD, dkappa = consensus_field(lap, x[:n], x[n:], drive)
        return np.concatenate([dD, dkappa])

    return rhs
