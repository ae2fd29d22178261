"""Classical fourth-order Runge-Kutta step on a flat state vector."""

from __future__ import annotations

from collections.abc import Callable

import numpy as np

from errors import NonFiniteDerivativeError

VectorField = Callable[[np.ndarray], np.ndarray]


def rk4_step(rhs: VectorField, x: np.ndarray, h: float) -> np.ndarray:
    """One RK4 step of size h. Raises NonFiniteDerivativeError on NaN/inf stages or result."""
    if not h > 0:
        raise ValueError(f"step size must be > 0, got {h}")
    k1 = rhs(x)
    k2 = rhs(x + 0.5 * h * k1)
    k3 = rhs(x + 0.5 * h * k2)
    k4 = rhs(x + h * k3)
    out = x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    if not np.all(np.isfinite(out)):
        raise NonFiniteDerivativeError("RK4 step produced a non-finite state")
    return out
