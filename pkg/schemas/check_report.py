"""Report of `check`: structural and game-theoretic conditions of a validated scenario."""

from __future__ import annotations

from pydantic import BaseModel, Field


class CheckReport(BaseModel):
    """Bounds are None when they do not apply (N <= 3, or a non-HVAC model)."""

    scenario: str
    n_players: int
    strategy: str
    connected: bool
    fiedler_value: float
    uniqueness_bound: float | None = Field(None, description="min 2w/(N-3); None when N <= 3 or non-HVAC.")
    uniqueness_margin: float | None = None
    h_diagonally_dominant: bool | None = Field(None, description="Hessian of Q; HVAC model only.")
    h_positive_definite: bool | None = None
    b_diagonally_dominant: bool = Field(..., description="Jacobian B at the comfort profile l_hat.")

    @property
    def ok(self) -> bool:
        return self.connected and all(
            flag is not False for flag in (self.h_diagonally_dominant, self.h_positive_definite)
        ) and (self.uniqueness_margin is None or self.uniqueness_margin > 0)
