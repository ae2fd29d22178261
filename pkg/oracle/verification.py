"""Brute-force Nash check: scan unilateral deviations of each rational player over its box."""

from __future__ import annotations

import numpy as np

from games.cost_model import cost_model
from schemas.equilibrium import NashVerification
from schemas.game import GameSpec


def verify_nash(spec: GameSpec, l: np.ndarray, grid_points: int, eps: float) -> NashVerification:
    """
    True iff no rational player lowers its cost by more than eps by moving to one of
    grid_points equally spaced actions in [l_min_i, l_max_i], others held fixed.
    """
    if grid_points < 2:
        raise ValueError(f"grid_points must be >= 2, got {grid_points}")
    l = np.asarray(l, dtype=float)
    model = cost_model(spec)
    total = float(l.sum())
    worst = 0.0
    worst_player: int | None = None
    for i in spec.rational_indices:
        p = spec.players[i]
        v = model.v[i]
        others = total - l[i]
        grid = np.linspace(p.l_min, p.l_max, grid_points)
        current = v(l[i]) + model.p(total) * l[i]
        deviations = v(grid) + model.p(others + grid) * grid
        improvement = float(current - deviations.min())
        if improvement > worst:
            worst, worst_player = improvement, i
    return NashVerification(ok=worst <= eps, worst_improvement=worst, worst_player=worst_player)
