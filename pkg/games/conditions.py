"""Condition checkers: uniqueness bound, diagonal dominance, definiteness, local stability."""

from __future__ import annotations

import math

import numpy as np

from errors import ModelNotPotentialError, NotSquareError
from games.cost_model import jacobian_B
from schemas.game import GameSpec


def uniqueness_bound(spec: GameSpec) -> float:
    """min_i 2 w_i / (N - 3) for N > 3, +inf otherwise."""
    if not spec.pricing.is_linear:
        raise ModelNotPotentialError("uniqueness bound needs linear pricing")
    if spec.n <= 3:
        return math.inf
    return min(2.0 * p.w for p in spec.players) / (spec.n - 3)


def uniqueness_margin(spec: GameSpec) -> float:
    """uniqueness_bound - a; positive iff the condition holds (inf when N <= 3)."""
    return uniqueness_bound(spec) - float(spec.pricing.a)  # type: ignore[arg-type]


def check_uniqueness_condition(spec: GameSpec) -> bool:
    """True iff N <= 3 or a < min_i 2 w_i / (N - 3). Raises ModelNotPotentialError without linear pricing."""
    bound = uniqueness_bound(spec)
    return math.isinf(bound) or float(spec.pricing.a) < bound  # type: ignore[arg-type]


def _square(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotSquareError(f"expected a square matrix, got shape {m.shape}")
    return m


def is_strictly_diagonally_dominant(m: np.ndarray) -> bool:
    """|M_ii| > sum_{j != i} |M_ij| for every row."""
    m = _square(m)
    absm = np.abs(m)
    diag = np.diag(absm)
    return bool(np.all(diag > absm.sum(axis=1) - diag))


def is_positive_definite(m: np.ndarray) -> bool:
    """Symmetric positive definiteness via the smallest eigenvalue."""
    m = _square(m)
    sym = 0.5 * (m + m.T)
    return bool(np.linalg.eigvalsh(sym)[0] > 0.0)


def second_order_condition(spec: GameSpec, l: np.ndarray) -> bool:
    """d^2 C_i / dl_i^2 > 0 for every player at profile l."""
    return bool(np.all(np.diag(jacobian_B(spec, l)) > 0.0))


def local_stability(spec: GameSpec, l: np.ndarray) -> bool:
    """Reduced action flow Jacobian -diag(k) B is Hurwitz at l."""
    k = np.array([p.gain_k for p in spec.players])
    jac = -k[:, None] * jacobian_B(spec, l)
    return bool(np.all(np.linalg.eigvals(jac).real < 0.0))
