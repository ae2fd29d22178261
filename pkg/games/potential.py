"""Potential Q of the HVAC game, its gradient and Hessian, and the box-constrained Lagrangian.

Q(l) = sum_i w_i (l_i - l_hat_i)^2 + (a/2) sum_i (sum_{j != i} l_j) l_i + sum_i (a l_i^2 + p0 l_i)

The pairwise term counts each unordered pair once, so dQ/dl_i equals player i's
pseudo-gradient at D_i = sum l, and the Hessian has diagonal 2w_i + 2a, off-diagonal a.
"""

from __future__ import annotations

import numpy as np

from errors import ModelNotPotentialError, NegativeMultiplierError
from schemas.game import GameSpec


def _require_potential(spec: GameSpec) -> tuple[np.ndarray, np.ndarray, float, float]:
    if not spec.is_hvac:
        raise ModelNotPotentialError("potential is defined only for the HVAC model with linear pricing")
    w = np.array([p.w for p in spec.players])
    l_hat = np.array([p.l_hat for p in spec.players])
    return w, l_hat, float(spec.pricing.a), float(spec.pricing.p0)  # type: ignore[arg-type]


def potential(spec: GameSpec, l: np.ndarray) -> float:
    w, l_hat, a, p0 = _require_potential(spec)
    l = np.asarray(l, dtype=float)
    s = l.sum()
    curtailment = np.sum(w * (l - l_hat) ** 2)
    pairwise = 0.5 * a * (s * s - np.sum(l * l))
    own = np.sum(a * l * l + p0 * l)
    return float(curtailment + pairwise + own)


def gradient_Q(spec: GameSpec, l: np.ndarray) -> np.ndarray:
    """dQ/dl_i = 2 w_i (l_i - l_hat_i) + a sum l + p0 + a l_i."""
    w, l_hat, a, p0 = _require_potential(spec)
    l = np.asarray(l, dtype=float)
    return 2.0 * w * (l - l_hat) + a * l.sum() + p0 + a * l


def hessian_Q(spec: GameSpec) -> np.ndarray:
    """Constant Hessian H: H_ii = 2 w_i + 2a, H_ij = a."""
    w, _, a, _ = _require_potential(spec)
    h = np.full((w.size, w.size), a)
    h[np.diag_indices(w.size)] = 2.0 * w + 2.0 * a
    return h


def linear_term(spec: GameSpec) -> np.ndarray:
    """b with grad Q(l) = H l - b, i.e. b_i = 2 w_i l_hat_i - p0."""
    w, l_hat, _, p0 = _require_potential(spec)
    return 2.0 * w * l_hat - p0


def split_multipliers(eta: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Split [eta_.1 block, eta_.2 block] into lower- and upper-bound multipliers."""
    eta = np.asarray(eta, dtype=float)
    if eta.size != 2 * n:
        raise ValueError(f"expected {2 * n} multipliers, got {eta.size}")
    return eta[:n], eta[n:]


def lagrangian(spec: GameSpec, l: np.ndarray, eta: np.ndarray) -> float:
    """L(l, eta) = Q(l) + sum_i [eta_i1 (l_min_i - l_i) + eta_i2 (l_i - l_max_i)]."""
    l = np.asarray(l, dtype=float)
    eta_lo, eta_hi = split_multipliers(eta, spec.n)
    if np.any(eta_lo < 0) or np.any(eta_hi < 0):
        raise NegativeMultiplierError("multipliers must be non-negative")
    l_min = np.array([p.l_min for p in spec.players])
    l_max = np.array([p.l_max for p in spec.players])
    return potential(spec, l) + float(np.sum(eta_lo * (l_min - l)) + np.sum(eta_hi * (l - l_max)))
