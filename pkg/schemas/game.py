"""Game schema: players, pricing and the energy consumption game they form."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, model_validator


class PlayerSpec(BaseModel):
    """
    One electricity user: curtailment cost, comfort target, box bounds and seeking gains.

    HVAC form uses V(l) = w (l - l_hat)^2. A general polynomial V is given by v_coeffs
    (ascending powers). A stubborn player holds consumption `stubborn` and ignores its bounds.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    w: float = Field(1.0, gt=0, description="Thermal weight nu*xi^2 (cost curvature).")
    l_hat: float = Field(..., description="Comfort target energy (kWh).")
    l_min: float = Field(..., description="Lower consumption bound (kWh).")
    l_max: float = Field(..., description="Upper consumption bound (kWh).")
    gain_k: float = Field(1.0, gt=0, description="Seeking gain k_i.")
    gain_m1: float = Field(1.0, gt=0, description="Lower-bound multiplier gain m_i1.")
    gain_m2: float = Field(1.0, gt=0, description="Upper-bound multiplier gain m_i2.")
    stubborn: float | None = Field(None, description="Fixed consumption of a stubborn player (kWh).")
    v_coeffs: list[float] | None = Field(
        None,
        min_length=1,
        description="General curtailment cost V_i as polynomial coefficients, ascending powers.",
    )

    @model_validator(mode="after")
    def _bounds_ordered(self) -> "PlayerSpec":
        if self.stubborn is None and not self.l_min < self.l_max:
            raise ValueError(f"l_min ({self.l_min}) must be < l_max ({self.l_max})")
        return self

    @property
    def is_stubborn(self) -> bool:
        return self.stubborn is not None


class PricingSpec(BaseModel):
    """Pricing P(x). Linear form a*x + p0, or a general polynomial via p_coeffs (ascending powers)."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    a: float | None = Field(None, ge=0, description="Price slope (MU/kWh per kWh).")
    p0: float | None = Field(None, description="Base price (MU/kWh).")
    p_coeffs: list[float] | None = Field(None, min_length=1, description="General P as polynomial coefficients.")

    @model_validator(mode="after")
    def _one_form(self) -> "PricingSpec":
        linear = self.a is not None or self.p0 is not None
        if linear and self.p_coeffs is not None:
            raise ValueError("give either {a, p0} or p_coeffs, not both")
        if not linear and self.p_coeffs is None:
            raise ValueError("pricing needs {a, p0} or p_coeffs")
        if linear and (self.a is None or self.p0 is None):
            raise ValueError("linear pricing needs both a and p0")
        return self

    @property
    def is_linear(self) -> bool:
        return self.p_coeffs is None

    def coefficients(self) -> list[float]:
        """Ascending polynomial coefficients of P."""
        if self.p_coeffs is not None:
            return list(self.p_coeffs)
        return [float(self.p0), float(self.a)]  # type: ignore[arg-type]


class GameSpec(BaseModel):
    """
    Aggregative energy consumption game: ordered players plus a shared pricing function.

    HVAC mode (potential game) iff pricing is linear and no player declares v_coeffs.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    players: list[PlayerSpec] = Field(..., min_length=1)
    pricing: PricingSpec

    @property
    def n(self) -> int:
        return len(self.players)

    @property
    def is_hvac(self) -> bool:
        return self.pricing.is_linear and all(p.v_coeffs is None for p in self.players)

    @property
    def stubborn_indices(self) -> list[int]:
        return [i for i, p in enumerate(self.players) if p.is_stubborn]

    @property
    def rational_indices(self) -> list[int]:
        return [i for i, p in enumerate(self.players) if not p.is_stubborn]
