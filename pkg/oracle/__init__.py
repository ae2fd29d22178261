"""Equilibrium oracle: closed-form, projected best response, stubborn reduction, brute-force check."""

from oracle.duality import dual_function
from oracle.equilibrium import (
    best_response,
    constrained_equilibrium,
    inner_equilibrium,
    stubborn_equilibrium,
)
from oracle.verification import verify_nash

__all__ = [
    "inner_equilibrium",
    "constrained_equilibrium",
    "best_response",
    "stubborn_equilibrium",
    "verify_nash",
    "dual_function",
]
