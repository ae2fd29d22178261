"""Nash seeking dynamics: consensus estimator plus GENERAL, PRIMAL_DUAL and INNER action laws."""

from dynamics.base import SeekingDynamics
from dynamics.consensus import consensus_field, consensus_matrix, consensus_rhs, frozen_consensus_rhs
from dynamics.general import GeneralSeekingDynamics
from dynamics.inner import InnerSeekingDynamics, reduced_inner_rhs
from dynamics.primal_dual import PrimalDualSeekingDynamics
from dynamics.registry import get_dynamics, list_strategies, register_strategy
from dynamics.state import SimState, StateLayout, multipliers

register_strategy("general", GeneralSeekingDynamics)
register_strategy("primal_dual", PrimalDualSeekingDynamics)
register_strategy("inner", InnerSeekingDynamics)

from dynamics.fields import general_rhs, inner_rhs, primal_dual_rhs, residual  # noqa: E402

__all__ = [
    "SimState",
    "StateLayout",
    "multipliers",
    "SeekingDynamics",
    "GeneralSeekingDynamics",
    "PrimalDualSeekingDynamics",
    "InnerSeekingDynamics",
    "register_strategy",
    "get_dynamics",
    "list_strategies",
    "consensus_field",
    "consensus_rhs",
    "consensus_matrix",
    "frozen_consensus_rhs",
    "general_rhs",
    "primal_dual_rhs",
    "inner_rhs",
    "residual",
    "reduced_inner_rhs",
]
