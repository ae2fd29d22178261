"""Energy consumption game: costs, pricing, potential, and condition checkers."""

from games.conditions import (
    check_uniqueness_condition,
    is_positive_definite,
    is_strictly_diagonally_dominant,
    local_stability,
    second_order_condition,
    uniqueness_bound,
    uniqueness_margin,
)
from games.cost_model import (
    CostModel,
    cost,
    cost_model,
    jacobian_B,
    price,
    pseudo_gradient,
    pseudo_gradient_vector,
)
from games.potential import gradient_Q, hessian_Q, lagrangian, linear_term, potential

__all__ = [
    "CostModel",
    "cost_model",
    "cost",
    "price",
    "pseudo_gradient",
    "pseudo_gradient_vector",
    "jacobian_B",
    "potential",
    "gradient_Q",
    "hessian_Q",
    "linear_term",
    "lagrangian",
    "check_uniqueness_condition",
    "uniqueness_bound",
    "uniqueness_margin",
    "is_strictly_diagonally_dominant",
    "is_positive_definite",
    "second_order_condition",
    "local_stability",
]
