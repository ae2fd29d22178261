"""Fixed-step integration loop with sampling, convergence stop and divergence abort."""

from __future__ import annotations

import math
import time
from collections.abc import Callable

import numpy as np

from errors import NonFiniteDerivativeError
from integrators.rk4 import VectorField, rk4_step
from integrators.trajectory import StopReason, Trajectory
from observability import get_logger, log_run_step
from schemas.scenario import IntegratorConfig

logger = get_logger(__name__)


def _default_residual(rhs: VectorField) -> Callable[[np.ndarray], float]:
    return lambda x: float(np.linalg.norm(rhs(x)))


def integrate(
    rhs: VectorField,
    x0: np.ndarray,
    cfg: IntegratorConfig,
    *,
    residual: Callable[[np.ndarray], float] | None = None,
) -> Trajectory:
    """
    Integrate x' = rhs(x) from x0 with fixed step cfg.step_h.

    Stops at the first sample with residual < stop_tol (CONVERGED), when t reaches t_max
    (HORIZON), or as soon as ||x|| exceeds diverge_bound (DIVERGED). A non-finite derivative
    ends the run with NUMERIC_FAILURE and the samples gathered so far.
    Time is computed as k*h to avoid drift.
    """
    x = np.array(x0, dtype=float)
    if not np.all(np.isfinite(x)):
        raise NonFiniteDerivativeError("initial state is not finite")
    res_fn = residual or _default_residual(rhs)
    h = cfg.step_h
    total_steps = max(0, math.ceil(cfg.t_max / h - 1e-9))
    started = time.perf_counter()

    times: list[float] = []
    states: list[np.ndarray] = []
    residuals: list[float] = []
    failure: str | None = None

    def sample(step: int, state: np.ndarray, r: float | None = None) -> float:
        r = res_fn(state) if r is None else r
        times.append(step * h)
        states.append(state.copy())
        residuals.append(r)
        return r

    step = 0
    reason = StopReason.HORIZON
    try:
        r0 = sample(0, x)
        if r0 < cfg.stop_tol:
            reason = StopReason.CONVERGED
        elif np.linalg.norm(x) > cfg.diverge_bound:
            reason = StopReason.DIVERGED
        else:
            while step < total_steps:
                x = rk4_step(rhs, x, h)
                step += 1
                if np.linalg.norm(x) > cfg.diverge_bound:
                    reason = StopReason.DIVERGED
                    sample(step, x)
                    break
                if step % cfg.sample_every == 0:
                    if sample(step, x) < cfg.stop_tol:
                        reason = StopReason.CONVERGED
                        break
            else:
                if times[-1] != step * h:
                    r = sample(step, x)
                    if r < cfg.stop_tol:
                        reason = StopReason.CONVERGED
    except (NonFiniteDerivativeError, FloatingPointError) as e:
        reason = StopReason.NUMERIC_FAILURE
        failure = str(e)
        logger.warning("Integration aborted at step %d: %s", step, e)
        if not times or times[-1] != step * h:
            times.append(step * h)
            states.append(x.copy())
            residuals.append(float("nan"))

    wall = time.perf_counter() - started
    log_run_step(
        logger,
        "integrator",
        "done",
        {"stop_reason": reason.value, "steps": step, "t": step * h, "wall_time_s": round(wall, 3)},
    )
    return Trajectory(
        times=np.array(times),
        states=np.vstack(states),
        residuals=np.array(residuals),
        stop_reason=reason,
        steps=step,
        wall_time_s=wall,
        failure=failure,
    )
