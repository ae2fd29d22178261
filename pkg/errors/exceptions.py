"""Domain exceptions for graphs, games, dynamics, integration, oracle and scenario I/O."""

from __future__ import annotations

from dataclasses import dataclass


class NashSimError(Exception):
    """Root of all errors raised by this package."""


class IndexOutOfRangeError(NashSimError, IndexError):
    """Node or player index outside [0, n)."""


class SelfLoopError(NashSimError, ValueError):
    """Edge (i, i) given to a graph builder."""


class NotConnectedError(NashSimError, ValueError):
    """Graph is not connected where a connected graph is required."""


class ModelNotPotentialError(NashSimError, ValueError):
    """Operation needs the HVAC/linear-pricing model (potential game) but got a general model."""


class NotSquareError(NashSimError, ValueError):
    """Matrix argument is not square."""


class NegativeMultiplierError(NashSimError, ValueError):
    """Lagrange multiplier vector has a negative entry."""


class NonPositiveDeltaError(NashSimError, ValueError):
    """Time-scale parameter delta must be > 0."""


class UnknownStrategyError(NashSimError, KeyError):
    """No seeking dynamics registered under the requested name."""


class NonFiniteDerivativeError(NashSimError, ArithmeticError):
    """Vector field produced NaN or inf during integration."""


class NotInnerError(NashSimError, ValueError):
    """Unconstrained equilibrium violates a box bound; use the constrained solver."""


class SingularSystemError(NashSimError, ValueError):
    """Linear system for the equilibrium is singular."""


class ConditionViolatedError(NashSimError, ValueError):
    """Uniqueness condition a < min 2w/(N-3) does not hold."""


class NoStubbornPlayerError(NashSimError, ValueError):
    """stubborn_equilibrium called on a game without stubborn players."""


class ScenarioParseError(NashSimError, ValueError):
    """Scenario document is not well-formed JSON."""


@dataclass(frozen=True)
class Violation:
    """One validation failure, addressed by a dotted field path (e.g. players.2.gain_k)."""

    field: str
    message: str

    def __str__(self) -> str:
        return f"{self.field}: {self.message}"


class ScenarioValidationError(NashSimError, ValueError):
    """Scenario failed validation. Carries every violation, not just the first."""

    def __init__(self, violations: list[Violation]) -> None:
        self.violations = list(violations)
        lines = "\n".join(f"  - {v}" for v in self.violations)
        super().__init__(f"{len(self.violations)} validation error(s):\n{lines}")

    def fields(self) -> list[str]:
        """Field paths of all violations."""
        return [v.field for v in self.violations]


class ArtifactWriteError(NashSimError, OSError):
    """Writing a trajectory/summary artifact failed."""
