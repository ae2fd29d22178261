"""Tests for the consensus estimator and the GENERAL, PRIMAL_DUAL and INNER seeking laws."""

from __future__ import annotations

import networkx as nx
import numpy as np
import pytest

from dynamics import (
    SimState,
    consensus_matrix,
    consensus_rhs,
    frozen_consensus_rhs,
    general_rhs,
    get_dynamics,
    inner_rhs,
    multipliers,
    primal_dual_rhs,
    reduced_inner_rhs,
    residual,
)
from errors import ModelNotPotentialError, NonPositiveDeltaError, NotConnectedError, UnknownStrategyError
from games import gradient_Q, potential
from graph import build_graph, laplacian, ring_graph
from integrators import integrate
from oracle import constrained_equilibrium, inner_equilibrium
from schemas.game import GameSpec, PlayerSpec, PricingSpec
from schemas.scenario import IntegratorConfig, StrategyMode


def _equilibrium_kappa(g, l: np.ndarray) -> np.ndarray:
    """kappa with L kappa = N l - 1 sum(l), the consensus equilibrium for D = 1 sum(l)."""
    lap = laplacian(g)
    rhs = g.n * l - l.sum()
    kappa, *_ = np.linalg.lstsq(lap, rhs, rcond=None)
    return kappa


def _general_game() -> GameSpec:
    player = PlayerSpec(l_hat=0.0, l_min=0.0, l_max=20.0, v_coeffs=[0.0, -10.0, 1.0])
    return GameSpec(players=[player] * 3, pricing=PricingSpec(p_coeffs=[1.0, 0.1, 0.01]))


def test_consensus_single_node() -> None:
    """N=1: dD = -D + l, dkappa = 0."""
    g = build_graph(1, [])
    dD, dk = consensus_rhs(g, np.array([2.0]), np.array([5.0]), np.array([3.0]))
    assert dD.tolist() == [1.0]
    assert dk.tolist() == [0.0]


def test_consensus_equilibrium_ring_three() -> None:
    """D = 1 sum(l) with L kappa = N l - 1 sum(l) is a rest point."""
    g = ring_graph(3)
    l = np.array([1.0, 4.0, 7.0])
    kappa = _equilibrium_kappa(g, l)
    dD, dk = consensus_rhs(g, np.full(3, l.sum()), kappa, 3 * l)
    assert np.max(np.abs(dD)) < 1e-12
    assert np.max(np.abs(dk)) < 1e-12


def test_consensus_requires_connected() -> None:
    g = build_graph(3, [(0, 1)])
    with pytest.raises(NotConnectedError):
        consensus_rhs(g, np.zeros(3), np.zeros(3), np.zeros(3))


def test_consensus_tracks_aggregate_random_graphs() -> None:
    """Frozen actions: every estimate reaches sum(l) within 1e-6 with affine log-error decay at the slow eigenvalue."""
    rng = np.random.default_rng(2024)
    cfg = IntegratorConfig(step_h=0.05, t_max=5000.0, sample_every=4, stop_tol=1e-6, diverge_bound=1e9)
    checked = 0
    while checked < 50:
        n = int(rng.integers(2, 9))
        nxg = nx.gnp_random_graph(n, float(rng.uniform(0.3, 0.9)), seed=int(rng.integers(1 << 30)))
        g = build_graph(n, nxg.edges())
        if not nx.is_connected(nxg):
            continue
        checked += 1
        l = rng.uniform(10.0, 90.0, size=n)
        total = l.sum()
        x0 = np.concatenate([rng.uniform(0.0, 100.0, size=n), rng.uniform(-50.0, 50.0, size=n)])
        def error(x: np.ndarray, n: int = n, total: float = total) -> float:
            return float(np.max(np.abs(x[:n] - total)))

        traj = integrate(frozen_consensus_rhs(g, l), x0, cfg, residual=error)
        assert traj.stop_reason.value == "CONVERGED"
        assert traj.final_residual < 1e-6

        eigs = np.linalg.eigvals(consensus_matrix(g))
        slow = max(ev.real for ev in eigs if abs(ev) > 1e-9)
        tail = traj.residuals < 1e-3
        if tail.sum() < 5:
            continue
        t, logs = traj.times[tail], np.log(traj.residuals[tail])
        slope, intercept = np.polyfit(t, logs, 1)
        fitted = slope * t + intercept
        r2 = 1.0 - np.sum((logs - fitted) ** 2) / np.sum((logs - logs.mean()) ** 2)
        assert r2 > 0.99
        assert slope == pytest.approx(slow, rel=0.2)


def test_consensus_preserves_kappa_sum() -> None:
    g = ring_graph(5)
    rng = np.random.default_rng(0)
    _, dk = consensus_rhs(g, rng.normal(size=5), rng.normal(size=5), rng.normal(size=5))
    assert abs(dk.sum()) < 1e-12


def test_general_rhs_at_equilibrium(table1_game: GameSpec) -> None:
    """Full derivative vanishes at (l*, D = 1 sum l*, kappa_e)."""
    g = ring_graph(5)
    l_star = np.array(inner_equilibrium(table1_game).l_star)
    state = SimState(l=l_star, D=np.full(5, l_star.sum()), kappa=_equilibrium_kappa(g, l_star))
    d = general_rhs(table1_game, g, state, 0.05)
    for part in (d.l, d.D, d.kappa):
        assert np.max(np.abs(part)) < 1e-9


def test_general_rhs_pure_decay() -> None:
    """N=1, V'(l) = l, P = 0: dl = -delta k l."""
    game = GameSpec(
        players=[PlayerSpec(l_hat=0.0, l_min=-1.0, l_max=1.0, gain_k=2.0, v_coeffs=[0.0, 0.0, 0.5])],
        pricing=PricingSpec(p_coeffs=[0.0]),
    )
    d = general_rhs(game, build_graph(1, []), SimState(l=np.array([3.0]), D=np.zeros(1), kappa=np.zeros(1)), 0.1)
    assert d.l[0] == pytest.approx(-0.1 * 2.0 * 3.0)


def test_stubborn_player_never_moves(table1_stubborn) -> None:
    """dl = 0 for the stubborn player under every strategy, and it drives consensus with N l_s."""
    game = table1_stubborn.game
    g = ring_graph(5)
    rng = np.random.default_rng(5)
    state = SimState(l=rng.uniform(30, 90, 5), D=rng.uniform(0, 300, 5), kappa=rng.normal(size=5))
    for rhs in (general_rhs, inner_rhs):
        assert rhs(game, g, state, 0.05).l[4] == 0.0
    pd_state = SimState(l=state.l, D=state.D, kappa=state.kappa, zeta=rng.normal(size=10))
    d = primal_dual_rhs(game, g, pd_state, 0.05)
    assert d.l[4] == 0.0
    assert d.zeta[4] == 0.0 and d.zeta[9] == 0.0

    dyn = get_dynamics("inner", game, g, 0.05)
    np.testing.assert_allclose(dyn.drive(state.l)[4], 5 * 100.0)
    x0 = dyn.initial_state()
    assert x0[4] == 100.0


def test_general_equals_inner_on_hvac(table1_game: GameSpec) -> None:
    """On the HVAC model the GENERAL bracket reduces to the INNER bracket."""
    g = ring_graph(5)
    rng = np.random.default_rng(9)
    state = SimState(l=rng.uniform(30, 90, 5), D=rng.uniform(0, 300, 5), kappa=rng.normal(size=5))
    np.testing.assert_allclose(
        general_rhs(table1_game, g, state, 0.05).l, inner_rhs(table1_game, g, state, 0.05).l, rtol=1e-12
    )


def test_primal_dual_at_saddle_point(table1_constrained) -> None:
    """At (l*, eta*) with exact estimates: dl = 0, dzeta = 0 on active bounds, < 0 on inactive ones."""
    game = table1_constrained.game
    g = ring_graph(5)
    eq = constrained_equilibrium(game)
    l_star = np.array(eq.l_star)
    eta = np.array(eq.eta_star)
    zeta = np.log(np.where(eta > 0, eta, 1e-300))
    state = SimState(l=l_star, D=np.full(5, l_star.sum()), kappa=_equilibrium_kappa(g, l_star), zeta=zeta)
    d = primal_dual_rhs(game, g, state, 0.05)
    assert np.max(np.abs(d.l)) < 1e-8
    assert eq.active_lower == [0]
    assert d.zeta[0] == pytest.approx(0.0, abs=1e-12)
    inactive = [k for k in range(10) if k != 0]
    assert np.all(d.zeta[inactive] < 0)


def test_primal_dual_gap_signs_and_inner_limit(table1_inner) -> None:
    """Strictly inside the box both gaps are negative; eta -> 0 recovers the INNER field."""
    game = table1_inner.game
    g = ring_graph(5)
    l = np.array([50.0, 55.0, 60.0, 65.0, 70.0])
    state = SimState(l=l, D=np.full(5, 250.0), kappa=np.zeros(5), zeta=np.zeros(10))
    d = primal_dual_rhs(game, g, state, 0.05)
    assert np.all(d.zeta < 0)
    vanishing = SimState(l=l, D=state.D, kappa=state.kappa, zeta=np.full(10, -800.0))
    np.testing.assert_allclose(
        primal_dual_rhs(game, g, vanishing, 0.05).l,
        inner_rhs(game, g, SimState(l=l, D=state.D, kappa=state.kappa), 0.05).l,
    )


def test_inner_rhs_decoupled(make_game) -> None:
    """a = p0 = 0: dl = -delta k 2 w (l - l_hat)."""
    game = make_game([10.0, 20.0, 30.0], a=0.0, p0=0.0)
    state = SimState(l=np.array([11.0, 19.0, 30.0]), D=np.zeros(3), kappa=np.zeros(3))
    d = inner_rhs(game, ring_graph(3), state, 0.5)
    np.testing.assert_allclose(d.l, [-1.0, 1.0, 0.0])


def test_inner_at_equilibrium(table1_game: GameSpec) -> None:
    g = ring_graph(5)
    l_star = np.array(inner_equilibrium(table1_game).l_star)
    state = SimState(l=l_star, D=np.full(5, l_star.sum()), kappa=_equilibrium_kappa(g, l_star))
    assert residual(table1_game, g, state, StrategyMode.INNER) < 1e-10


def test_reduced_flow_matches_gradient(table1_game: GameSpec) -> None:
    """Forcing D_i = sum(l) in the INNER law reproduces -delta k grad Q exactly."""
    g = ring_graph(5)
    rng = np.random.default_rng(1)
    for _ in range(20):
        l = rng.uniform(30, 90, 5)
        state = SimState(l=l, D=np.full(5, l.sum()), kappa=np.zeros(5))
        expected = -0.05 * gradient_Q(table1_game, l)
        np.testing.assert_allclose(inner_rhs(table1_game, g, state, 0.05).l, expected, rtol=1e-14, atol=1e-12)
        np.testing.assert_allclose(reduced_inner_rhs(table1_game, l, 0.05), expected, rtol=1e-14, atol=1e-12)


def test_residual_positive_at_start(table1_game: GameSpec) -> None:
    g = ring_graph(5)
    l_hat = np.array([50.0, 55.0, 60.0, 65.0, 70.0])
    state = SimState(l=l_hat, D=np.zeros(5), kappa=np.zeros(5))
    assert residual(table1_game, g, state, "inner") > 0


def test_residual_measures_multipliers_in_eta_space(table1_constrained) -> None:
    """A decayed inactive multiplier contributes nothing even though its zeta rate is nonzero."""
    game = table1_constrained.game
    g = ring_graph(5)
    eq = constrained_equilibrium(game)
    l_star = np.array(eq.l_star)
    eta = np.array(eq.eta_star)
    zeta = np.log(np.where(eta > 0, eta, 1e-300))
    state = SimState(l=l_star, D=np.full(5, l_star.sum()), kappa=_equilibrium_kappa(g, l_star), zeta=zeta)
    assert residual(game, g, state, "primal_dual") < 1e-8


def test_recovered_multipliers_stay_positive_below_double_range(table1_constrained) -> None:
    """Log-multipliers far below -745 still recover a strictly positive eta and a finite residual."""
    zeta = np.array([-3000.0, -745.5, -10.0, 0.0])
    eta = multipliers(zeta)
    assert np.all(eta > 0)
    assert eta[0] == np.finfo(float).tiny
    assert eta[3] == 1.0
    assert eta[2] == pytest.approx(np.exp(-10.0), rel=1e-15)
    game = table1_constrained.game
    l = np.array([50.0, 55.0, 60.0, 65.0, 70.0])
    state = SimState(l=l, D=np.full(5, l.sum()), kappa=np.zeros(5), zeta=np.full(10, -3000.0))
    assert np.all(state.eta > 0)
    assert np.isfinite(residual(game, ring_graph(5), state, "primal_dual"))


def test_strategies_without_multipliers_have_no_multiplier_rates(table1_game: GameSpec) -> None:
    """INNER and GENERAL carry no zeta block; their multiplier hook yields nothing."""
    for mode in ("inner", "general"):
        dyn = get_dynamics(mode, table1_game, ring_graph(5), 0.05)
        assert not dyn.has_multipliers
        assert dyn._multiplier_rates(np.zeros(5), 0.05).size == 0
        assert dyn.rhs(dyn.initial_state()).size == dyn.layout.size == 15


def test_construction_errors(table1_game: GameSpec) -> None:
    g = ring_graph(5)
    with pytest.raises(NonPositiveDeltaError):
        get_dynamics("inner", table1_game, g, 0.0)
    with pytest.raises(NotConnectedError):
        get_dynamics("inner", table1_game, build_graph(5, [(0, 1)]), 0.05)
    with pytest.raises(UnknownStrategyError):
        get_dynamics("gossip", table1_game, g, 0.05)
    general = _general_game()
    with pytest.raises(ModelNotPotentialError):
        get_dynamics("inner", general, ring_graph(3), 0.05)
    with pytest.raises(ModelNotPotentialError):
        get_dynamics("primal_dual", general, ring_graph(3), 0.05)
    assert get_dynamics("general", general, ring_graph(3), 0.05).layout.size == 9


def test_potential_descends_on_reduced_flow(table1_game: GameSpec) -> None:
    """Q(l(t)) is non-increasing along the reduced INNER flow."""
    cfg = IntegratorConfig(step_h=0.01, t_max=200.0, sample_every=10, stop_tol=0.0)
    l0 = np.array([70.0, 40.0, 80.0, 50.0, 60.0])
    traj = integrate(lambda l: reduced_inner_rhs(table1_game, l, 0.05), l0, cfg)
    q = np.array([potential(table1_game, row) for row in traj.states])
    assert np.all(np.diff(q) <= 1e-10)
    assert q[-1] < q[0]
