"""Dual function of the box-constrained potential minimization."""

from __future__ import annotations

import numpy as np

from errors import NegativeMultiplierError, SingularSystemError
from games.potential import hessian_Q, lagrangian, linear_term, split_multipliers
from schemas.game import GameSpec


def dual_function(spec: GameSpec, eta: np.ndarray) -> tuple[float, np.ndarray]:
    """
    g(eta) = min_l L(l, eta), attained at l = H^-1 (b + eta_1 - eta_2).

    Returns (g(eta), minimizer). At the saddle point g(eta*) = Q(l*).
    """
    eta_lo, eta_hi = split_multipliers(eta, spec.n)
    if np.any(eta_lo < 0) or np.any(eta_hi < 0):
        raise NegativeMultiplierError("multipliers must be non-negative")
    try:
        l = np.linalg.solve(hessian_Q(spec), linear_term(spec) + eta_lo - eta_hi)
    except np.linalg.LinAlgError as e:
        raise SingularSystemError(f"Hessian is singular: {e}") from e
    return lagrangian(spec, l, eta), l
