"""Trajectory CSV: one row per sample, 12 significant digits, Q blank outside the HVAC model."""

from __future__ import annotations

import csv
import io
from pathlib import Path

from integrators.trajectory import Trajectory
from storage.atomic import write_text_atomic

FLOAT_FORMAT = ".12g"


def _fmt(value: float) -> str:
    return format(float(value), FLOAT_FORMAT)


def trajectory_header(n: int) -> list[str]:
    return (
        ["t"]
        + [f"l_{i}" for i in range(1, n + 1)]
        + [f"D_{i}" for i in range(1, n + 1)]
        + ["aggregate", "price", "Q", "residual"]
    )


def write_trajectory(traj: Trajectory, destination: str | Path) -> int:
    """Write header `t,l_1..l_N,D_1..D_N,aggregate,price,Q,residual` and one row per sample; returns row count."""
    if len(traj) == 0:
        raise ValueError("cannot write an empty trajectory")
    if traj.series is None:
        raise ValueError("trajectory has no derived series; attach them before writing")
    series = traj.series
    n = series.estimates.shape[1]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(trajectory_header(n))
    for k in range(len(traj)):
        row = [_fmt(traj.times[k])]
        row += [_fmt(v) for v in traj.states[k, :n]]
        row += [_fmt(v) for v in series.estimates[k]]
        row += [_fmt(series.aggregate[k]), _fmt(series.prices[k])]
        row.append("" if series.potential is None else _fmt(series.potential[k]))
        row.append(_fmt(traj.residuals[k]))
        writer.writerow(row)
    write_text_atomic(destination, buf.getvalue())
    return len(traj)
