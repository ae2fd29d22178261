"""Pytest configuration. Editable install (pip install -e .) makes packages importable; no PYTHONPATH needed.

Shared fixtures: the bundled golden scenarios, the five-user bundled game, and a random HVAC game factory.
"""

from __future__ import annotations

from collections.abc import Callable

import numpy as np
import pytest

from schemas.game import GameSpec, PlayerSpec, PricingSpec
from schemas.scenario import Scenario
from scenarios import load_bundled


@pytest.fixture
def table1_inner() -> Scenario:
    """Bundled five-user scenario, INNER strategy, bounds 0.8/1.2 of l_hat."""
    return load_bundled("table1_inner")


@pytest.fixture
def table1_constrained() -> Scenario:
    """Same game with player 1 boxed to [45, 55], PRIMAL_DUAL strategy."""
    return load_bundled("table1_constrained")


@pytest.fixture
def table1_stubborn() -> Scenario:
    """Same game with player 5 stubborn at 100 kWh, INNER strategy."""
    return load_bundled("table1_stubborn")


@pytest.fixture
def table1_game(table1_inner: Scenario) -> GameSpec:
    return table1_inner.game


def hvac_game(
    l_hat: list[float],
    *,
    a: float,
    p0: float,
    w: list[float] | None = None,
    width: float = 0.2,
) -> GameSpec:
    """HVAC game with boxes (1 - width) * l_hat .. (1 + width) * l_hat."""
    w = w or [1.0] * len(l_hat)
    players = [
        PlayerSpec(w=wi, l_hat=lh, l_min=(1 - width) * lh, l_max=(1 + width) * lh)
        for wi, lh in zip(w, l_hat)
    ]
    return GameSpec(players=players, pricing=PricingSpec(a=a, p0=p0))


@pytest.fixture
def make_game() -> Callable[..., GameSpec]:
    """Factory: hvac_game(l_hat, a=..., p0=..., w=..., width=...)."""
    return hvac_game


@pytest.fixture
def random_hvac_game() -> Callable[[np.random.Generator, int], GameSpec]:
    """Factory for random HVAC games that satisfy the uniqueness condition with margin."""

    def make(rng: np.random.Generator, n: int) -> GameSpec:
        w = rng.uniform(0.5, 2.0, size=n)
        bound = np.inf if n <= 3 else 2.0 * w.min() / (n - 3)
        a = float(rng.uniform(0.0, min(0.8 * bound, 1.0)))
        players = []
        for wi in w:
            l_hat = float(rng.uniform(20.0, 80.0))
            lo = l_hat * float(rng.uniform(0.6, 1.0))
            hi = l_hat * float(rng.uniform(1.0, 1.4)) + 1.0
            players.append(PlayerSpec(w=float(wi), l_hat=l_hat, l_min=lo, l_max=hi))
        return GameSpec(players=players, pricing=PricingSpec(a=a, p0=float(rng.uniform(0.0, 10.0))))

    return make
