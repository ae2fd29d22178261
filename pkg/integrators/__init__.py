"""Deterministic fixed-step RK4 integration of the seeking flows."""

from integrators.engine import integrate
from integrators.rk4 import VectorField, rk4_step
from integrators.trajectory import StopReason, Trajectory, TrajectorySeries

__all__ = ["integrate", "rk4_step", "VectorField", "StopReason", "Trajectory", "TrajectorySeries"]
