"""Exception hierarchy. Every error subclasses NashSimError and the closest builtin."""

from errors.exceptions import (
    ArtifactWriteError,
    ConditionViolatedError,
    IndexOutOfRangeError,
    ModelNotPotentialError,
    NashSimError,
    NegativeMultiplierError,
    NoStubbornPlayerError,
    NonFiniteDerivativeError,
    NonPositiveDeltaError,
    NotConnectedError,
    NotInnerError,
    NotSquareError,
    ScenarioParseError,
    ScenarioValidationError,
    SelfLoopError,
    SingularSystemError,
    UnknownStrategyError,
    Violation,
)

__all__ = [
    "NashSimError",
    "IndexOutOfRangeError",
    "SelfLoopError",
    "NotConnectedError",
    "ModelNotPotentialError",
    "NotSquareError",
    "NegativeMultiplierError",
    "NonPositiveDeltaError",
    "UnknownStrategyError",
    "NonFiniteDerivativeError",
    "NotInnerError",
    "SingularSystemError",
    "ConditionViolatedError",
    "NoStubbornPlayerError",
    "ScenarioParseError",
    "ScenarioValidationError",
    "Violation",
    "ArtifactWriteError",
]
