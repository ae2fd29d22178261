"""Equilibrium oracle for the HVAC game, independent of the seeking dynamics.

Inner case: closed-form linear solve H l = b. Box-constrained case: cyclic projected
best response (a contraction because H is strictly diagonally dominant under the
uniqueness condition). Stubborn players are absorbed into the base price of a reduced game.
"""

from __future__ import annotations

import numpy as np

from errors import (
    ConditionViolatedError,
    IndexOutOfRangeError,
    ModelNotPotentialError,
    NoStubbornPlayerError,
    NotInnerError,
    SingularSystemError,
)
from games.conditions import check_uniqueness_condition, uniqueness_bound
from games.potential import gradient_Q, hessian_Q, linear_term
from observability import get_logger
from schemas.equilibrium import EquilibriumResult
from schemas.game import GameSpec, PricingSpec

logger = get_logger(__name__)

SWEEP_TOL = 1e-12
MAX_SWEEPS = 100_000
BOUND_TOL = 1e-9


def _require_unique(spec: GameSpec) -> None:
    if not spec.is_hvac:
        raise ModelNotPotentialError("equilibrium oracle needs the HVAC model with linear pricing")
    if not check_uniqueness_condition(spec):
        raise ConditionViolatedError(
            f"uniqueness condition violated: a={spec.pricing.a} >= bound {uniqueness_bound(spec):.6g}"
        )


def _bounds(spec: GameSpec) -> tuple[np.ndarray, np.ndarray]:
    return (
        np.array([p.l_min for p in spec.players]),
        np.array([p.l_max for p in spec.players]),
    )


def _kkt(spec: GameSpec, l: np.ndarray) -> tuple[np.ndarray, list[int], list[int], float]:
    """Multipliers from stationarity at the active bounds, plus the max KKT violation."""
    l_min, l_max = _bounds(spec)
    g = gradient_Q(spec, l)
    lower = l <= l_min + BOUND_TOL
    upper = l >= l_max - BOUND_TOL
    eta_lo = np.where(lower, np.maximum(0.0, g), 0.0)
    eta_hi = np.where(upper, np.maximum(0.0, -g), 0.0)
    residual = float(np.max(np.abs(g - eta_lo + eta_hi))) if l.size else 0.0
    return (
        np.concatenate([eta_lo, eta_hi]),
        [int(i) for i in np.flatnonzero(lower)],
        [int(i) for i in np.flatnonzero(upper)],
        residual,
    )


def inner_equilibrium(spec: GameSpec) -> EquilibriumResult:
    """
    Unconstrained Nash equilibrium: solve H l* = b with b_i = 2 w_i l_hat_i - p0.

    Every player is treated as rational. Raises NotInnerError when l* leaves a box.
    """
    _require_unique(spec)
    h = hessian_Q(spec)
    b = linear_term(spec)
    try:
        l_star = np.linalg.solve(h, b)
    except np.linalg.LinAlgError as e:
        raise SingularSystemError(f"equilibrium system is singular: {e}") from e
    l_min, l_max = _bounds(spec)
    outside = np.flatnonzero((l_star < l_min - BOUND_TOL) | (l_star > l_max + BOUND_TOL))
    if outside.size:
        raise NotInnerError(
            f"inner equilibrium violates the box of players {outside.tolist()}; use constrained_equilibrium"
        )
    residual = float(np.max(np.abs(gradient_Q(spec, l_star))))
    return EquilibriumResult(
        l_star=l_star.tolist(),
        aggregate=float(l_star.sum()),
        eta_star=[0.0] * (2 * spec.n),
        stationarity_residual=residual,
        method="inner",
    )


def _best_response_value(
    two_w: float, l_hat: float, a: float, p0: float, others_sum: float, lo: float, hi: float
) -> float:
    return min(hi, max(lo, (two_w * l_hat - p0 - a * others_sum) / (two_w + 2.0 * a)))


def best_response(spec: GameSpec, i: int, others_sum: float) -> float:
    """clamp((2 w_i l_hat_i - p0 - a * others_sum) / (2 w_i + 2a), l_min_i, l_max_i)."""
    if not spec.is_hvac:
        raise ModelNotPotentialError("best response is closed-form only for the HVAC model")
    if not 0 <= i < spec.n:
        raise IndexOutOfRangeError(f"player {i} not in [0, {spec.n})")
    p = spec.players[i]
    return _best_response_value(
        2.0 * p.w, p.l_hat, float(spec.pricing.a), float(spec.pricing.p0),  # type: ignore[arg-type]
        float(others_sum), p.l_min, p.l_max,
    )


def _projected_best_response(spec: GameSpec, max_sweeps: int) -> tuple[np.ndarray, int]:
    n = spec.n
    two_w = [2.0 * p.w for p in spec.players]
    l_hat = [p.l_hat for p in spec.players]
    l_min, l_max = _bounds(spec)
    a, p0 = float(spec.pricing.a), float(spec.pricing.p0)  # type: ignore[arg-type]
    l = np.clip(np.array(l_hat, dtype=float), l_min, l_max)
    total = float(l.sum())
    for sweep in range(1, max_sweeps + 1):
        change = 0.0
        for i in range(n):
            new = _best_response_value(two_w[i], l_hat[i], a, p0, total - l[i], l_min[i], l_max[i])
            change = max(change, abs(new - l[i]))
            total += new - l[i]
            l[i] = new
        total = float(l.sum())
        if change < SWEEP_TOL:
            return l, sweep
    logger.warning("Projected best response did not reach %.1e in %d sweeps", SWEEP_TOL, max_sweeps)
    return l, max_sweeps


def constrained_equilibrium(spec: GameSpec, *, max_sweeps: int = MAX_SWEEPS) -> EquilibriumResult:
    """
    Box-constrained Nash equilibrium (minimizer of Q over the box) by cyclic projected best response.

    Multipliers come from stationarity: eta_i1 = max(0, dQ/dl_i) at active lower bounds,
    eta_i2 = max(0, -dQ/dl_i) at active upper bounds.
    """
    _require_unique(spec)
    l_star, sweeps = _projected_best_response(spec, max_sweeps)
    eta, lower, upper, residual = _kkt(spec, l_star)
    return EquilibriumResult(
        l_star=l_star.tolist(),
        aggregate=float(l_star.sum()),
        eta_star=eta.tolist(),
        active_lower=lower,
        active_upper=upper,
        stationarity_residual=residual,
        method="constrained",
        sweeps=sweeps,
    )


def _reduced_game(spec: GameSpec) -> GameSpec:
    """Game of the rational players with stubborn consumption folded into p0."""
    fixed = sum(float(p.stubborn) for p in spec.players if p.is_stubborn)  # type: ignore[arg-type]
    a, p0 = float(spec.pricing.a), float(spec.pricing.p0)  # type: ignore[arg-type]
    return GameSpec(
        players=[spec.players[i] for i in spec.rational_indices],
        pricing=PricingSpec(a=a, p0=p0 + a * fixed),
    )


def stubborn_equilibrium(spec: GameSpec) -> EquilibriumResult:
    """
    Best responses of the rational players when stubborn players hold l_s.

    Solves the reduced system H_1 l_-s = b' with b'_j = 2 w_j l_hat_j - p0 - a * sum l_s,
    subject to the remaining boxes. Stubborn entries of the result are l_s with zero multipliers.
    """
    if not spec.stubborn_indices:
        raise NoStubbornPlayerError("game has no stubborn player")
    _require_unique(spec)
    n = spec.n
    l_star = np.array([p.stubborn if p.is_stubborn else 0.0 for p in spec.players], dtype=float)
    eta = np.zeros(2 * n)
    lower: list[int] = []
    upper: list[int] = []
    residual = 0.0
    sweeps: int | None = None
    rational = spec.rational_indices
    if rational:
        reduced = constrained_equilibrium(_reduced_game(spec))
        m = len(rational)
        reduced_eta = np.array(reduced.eta_star)
        for k, i in enumerate(rational):
            l_star[i] = reduced.l_star[k]
            eta[i] = reduced_eta[k]
            eta[n + i] = reduced_eta[m + k]
        lower = [rational[k] for k in reduced.active_lower]
        upper = [rational[k] for k in reduced.active_upper]
        residual = reduced.stationarity_residual
        sweeps = reduced.sweeps
    return EquilibriumResult(
        l_star=l_star.tolist(),
        aggregate=float(l_star.sum()),
        eta_star=eta.tolist(),
        active_lower=lower,
        active_upper=upper,
        stationarity_residual=residual,
        stubborn=spec.stubborn_indices,
        method="stubborn",
        sweeps=sweeps,
    )
