"""Cost model C_i(l_i, agg) = V_i(l_i) + P(agg) * l_i with polynomial V_i and P.

The HVAC game is the special case V_i = w_i (l_i - l_hat_i)^2, P(x) = a x + p0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import Polynomial
from numpy.polynomial import polynomial as npoly

from errors import IndexOutOfRangeError
from schemas.game import GameSpec, PlayerSpec


def _curtailment_polynomial(player: PlayerSpec) -> Polynomial:
    if player.v_coeffs is not None:
        return Polynomial(player.v_coeffs)
    # w (l - l_hat)^2 = w l_hat^2 - 2 w l_hat l + w l^2
    return Polynomial([player.w * player.l_hat**2, -2.0 * player.w * player.l_hat, player.w])


def _stack(polys: tuple[Polynomial, ...]) -> np.ndarray:
    """Coefficient matrix (degree+1, N), column j holding polynomial j zero-padded."""
    width = max(len(p.coef) for p in polys)
    out = np.zeros((width, len(polys)))
    for j, p in enumerate(polys):
        out[: len(p.coef), j] = p.coef
    return out


@dataclass(frozen=True)
class CostModel:
    """
    Per-player V_i with derivatives, and shared P with derivatives.

    Coefficient matrices allow evaluating every player's V_i at its own l_i in one call.
    """

    v: tuple[Polynomial, ...]
    p: Polynomial
    v_coef: np.ndarray
    dv_coef: np.ndarray
    d2v_coef: np.ndarray

    @property
    def n(self) -> int:
        return len(self.v)

    @property
    def dp(self) -> Polynomial:
        return self.p.deriv()

    @property
    def d2p(self) -> Polynomial:
        return self.p.deriv(2)

    def v_value(self, l: np.ndarray) -> np.ndarray:
        """Vector of V_i(l_i)."""
        return npoly.polyval(l, self.v_coef, tensor=False)

    def v_prime(self, l: np.ndarray) -> np.ndarray:
        """Vector of V_i'(l_i)."""
        return npoly.polyval(l, self.dv_coef, tensor=False)

    def v_second(self, l: np.ndarray) -> np.ndarray:
        return npoly.polyval(l, self.d2v_coef, tensor=False)


def cost_model(spec: GameSpec) -> CostModel:
    """Build the polynomial cost model of a game."""
    v = tuple(_curtailment_polynomial(p) for p in spec.players)
    return CostModel(
        v=v,
        p=Polynomial(spec.pricing.coefficients()),
        v_coef=_stack(v),
        dv_coef=_stack(tuple(poly.deriv() for poly in v)),
        d2v_coef=_stack(tuple(poly.deriv(2) for poly in v)),
    )


def _check_player(spec: GameSpec, i: int) -> None:
    if not 0 <= i < spec.n:
        raise IndexOutOfRangeError(f"player {i} not in [0, {spec.n})")


def price(spec: GameSpec, aggregate: float | np.ndarray) -> float | np.ndarray:
    """P(aggregate) in MU/kWh."""
    return cost_model(spec).p(aggregate)


def cost(spec: GameSpec, i: int, l_i: float, aggregate: float) -> float:
    """C_i = V_i(l_i) + P(aggregate) * l_i."""
    _check_player(spec, i)
    model = cost_model(spec)
    return float(model.v[i](l_i) + model.p(aggregate) * l_i)


def pseudo_gradient(spec: GameSpec, i: int, l_i: float, D_i: float) -> float:
    """Seeking direction of player i at its own action and aggregate estimate: V_i' + P(D_i) + l_i P'(D_i)."""
    _check_player(spec, i)
    model = cost_model(spec)
    return float(model.v[i].deriv()(l_i) + model.p(D_i) + l_i * model.dp(D_i))


def pseudo_gradient_vector(model: CostModel, l: np.ndarray, D: np.ndarray) -> np.ndarray:
    """All players' seeking directions at once."""
    return model.v_prime(l) + model.p(D) + l * model.dp(D)


def jacobian_B(spec: GameSpec, l: np.ndarray) -> np.ndarray:
    """B_ij = d^2 C_i / dl_i dl_j at profile l (aggregate = sum l)."""
    l = np.asarray(l, dtype=float)
    model = cost_model(spec)
    s = float(l.sum())
    dp, d2p = model.dp(s), model.d2p(s)
    n = l.size
    b = np.tile((dp + l * d2p)[:, None], (1, n))
    b[np.diag_indices(n)] = model.v_second(l) + 2.0 * dp + l * d2p
    return b
