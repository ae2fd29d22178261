"""Command-line front end: nashsim {check,solve,simulate,sweep,list}.

Exit codes: 0 success, 1 validation failure, 2 numeric failure or divergence, 3 I/O failure.
The report goes to stdout; logs go to stderr.
"""

from __future__ import annotations

import argparse
import io
import logging
import sys
from collections.abc import Sequence
from typing import TextIO

from errors import ScenarioValidationError
from integrators import StopReason
from scenarios import bundled_names, resolve_scenario
from services import SimulationService

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_NUMERIC = 2
EXIT_IO = 3

_FAILED_STOPS = {StopReason.DIVERGED.value, StopReason.NUMERIC_FAILURE.value}


def _vec(values: Sequence[float | None], fmt: str = ".3f") -> str:
    return "(" + ", ".join("-" if v is None else format(v, fmt) for v in values) + ")"


def _yes(flag: bool | None) -> str:
    return "n/a" if flag is None else ("yes" if flag else "no")


def cmd_check(args: argparse.Namespace, service: SimulationService, out: TextIO) -> int:
    report = service.check(resolve_scenario(args.scenario))
    margin = "n/a (N <= 3)" if report.uniqueness_margin is None else format(report.uniqueness_margin, ".6g")
    print(f"scenario: {report.scenario} ({report.n_players} players, {report.strategy})", file=out)
    print(f"graph connected: {_yes(report.connected)}", file=out)
    print(f"fiedler value: {report.fiedler_value:.6g}", file=out)
    print(f"uniqueness margin: {margin}", file=out)
    print(f"H strictly diagonally dominant: {_yes(report.h_diagonally_dominant)}", file=out)
    print(f"H positive definite: {_yes(report.h_positive_definite)}", file=out)
    print(f"B strictly diagonally dominant at l_hat: {_yes(report.b_diagonally_dominant)}", file=out)
    print(f"result: {'PASS' if report.ok else 'FAIL'}", file=out)
    return EXIT_OK if report.ok else EXIT_VALIDATION


def cmd_solve(args: argparse.Namespace, service: SimulationService, out: TextIO) -> int:
    scenario = resolve_scenario(args.scenario)
    result, verification = service.solve(scenario, verify=args.verify)
    print(f"scenario: {scenario.name}", file=out)
    print(f"method: {result.method}", file=out)
    print(f"l*: {_vec(result.l_star)}", file=out)
    print(f"aggregate: {result.aggregate:.3f}", file=out)
    print(f"active lower: {[i + 1 for i in result.active_lower]}", file=out)
    print(f"active upper: {[i + 1 for i in result.active_upper]}", file=out)
    if result.stubborn:
        print(f"stubborn: {[i + 1 for i in result.stubborn]}", file=out)
    print(f"eta*: {_vec(result.eta_star, '.6g')}", file=out)
    print(f"stationarity residual: {result.stationarity_residual:.3e}", file=out)
    if verification is not None:
        print(
            f"verify_nash: {'ok' if verification.ok else 'FAILED'} "
            f"(worst improvement {verification.worst_improvement:.3e})",
            file=out,
        )
        if not verification.ok:
            return EXIT_NUMERIC
    return EXIT_OK


def cmd_simulate(args: argparse.Namespace, service: SimulationService, out: TextIO) -> int:
    scenario = resolve_scenario(args.scenario)
    result = service.simulate(scenario, args.out)
    s = result.summary
    print(f"scenario: {s.scenario} ({s.strategy})", file=out)
    print(f"stop reason: {s.stop_reason} after {s.steps} steps (t = {s.final_time:.6g})", file=out)
    print(f"final l: {_vec(s.final_l)}", file=out)
    print(f"final aggregate: {s.final_aggregate:.3f}", file=out)
    if s.final_eta is not None:
        print(f"final eta: {_vec(s.final_eta, '.3e')}", file=out)
    if s.oracle is not None:
        print(f"oracle l*: {_vec(s.oracle.l_star)} ({s.oracle.method})", file=out)
        print(f"component errors: {_vec(s.component_errors or [], '.3e')}", file=out)
        print(f"max component error: {s.max_component_error:.3e}", file=out)
    elif s.oracle_note:
        print(f"oracle: none ({s.oracle_note})", file=out)
    print(f"consensus error: {s.consensus_error:.3e}", file=out)
    print(f"final residual: {s.final_residual:.3e}", file=out)
    for key, value in s.assumption_checks.items():
        print(f"check {key}: {value}", file=out)
    if result.trajectory_path is not None:
        print(f"trajectory: {result.trajectory_path}", file=out)
    print(f"summary: {result.summary_path}", file=out)
    return EXIT_NUMERIC if s.stop_reason in _FAILED_STOPS else EXIT_OK


def cmd_sweep(args: argparse.Namespace, service: SimulationService, out: TextIO) -> int:
    scenario = resolve_scenario(args.scenario)
    values = [v for raw in (args.values or []) for v in raw.split(",") if v]
    rows = service.sweep(scenario, args.param, values, args.out)
    print(f"sweep {args.param} on {scenario.name}", file=out)
    print(f"{'value':>12} {'stop_reason':>16} {'final_error':>12} {'conv_time':>10}  run_dir", file=out)
    for r in rows:
        err = "-" if r.final_error is None else format(r.final_error, ".3e")
        conv = "-" if r.convergence_time is None else format(r.convergence_time, ".4g")
        reason = r.stop_reason or "ERROR"
        print(f"{r.value:>12} {reason:>16} {err:>12} {conv:>10}  {r.run_dir}", file=out)
        if r.error:
            print(f"{'':>12} error: {r.error}", file=out)
    return EXIT_NUMERIC if any(r.failed for r in rows) else EXIT_OK


def cmd_list(args: argparse.Namespace, service: SimulationService, out: TextIO) -> int:
    for name in bundled_names():
        print(name, file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nashsim", description="Distributed Nash equilibrium seeking simulator.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quiet", action="store_true", help="Suppress the report and info logs")
    sub = parser.add_subparsers(dest="command", required=True)

    def scenario_arg(p: argparse.ArgumentParser) -> None:
        p.add_argument("--scenario", required=True, help="Scenario JSON path or bundled scenario name")

    p = sub.add_parser("check", parents=[common], help="Validate a scenario and report its conditions")
    scenario_arg(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("solve", parents=[common], help="Compute the equilibrium with the oracle")
    scenario_arg(p)
    p.add_argument("--verify", action="store_true", help="Brute-force check of unilateral deviations")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("simulate", parents=[common], help="Integrate the seeking dynamics and write artifacts")
    scenario_arg(p)
    p.add_argument("--out", help="Output directory (default: <output_dir>/<scenario name>)")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("sweep", parents=[common], help="Run one simulation per parameter value")
    scenario_arg(p)
    p.add_argument("--param", required=True, help="delta, step_h, topology or gain_k_all")
    p.add_argument("--values", nargs="*", default=[], help="Values, space- or comma-separated")
    p.add_argument("--out", help="Output directory; one subdirectory per value")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("list", parents=[common], help="List bundled scenarios")
    p.set_defaults(func=cmd_list)
    return parser


def main(argv: Sequence[str] | None = None, *, out: TextIO | None = None) -> int:
    """CLI entrypoint; returns the exit code."""
    args = build_parser().parse_args(argv)
    stream = out if out is not None else sys.stdout
    if args.quiet:
        logging.disable(logging.INFO)
        stream = io.StringIO()
    service = SimulationService()
    try:
        return args.func(args, service, stream)
    except ScenarioValidationError as e:
        print("validation failed:", file=stream)
        for v in e.violations:
            print(f"  - {v}", file=stream)
        return EXIT_VALIDATION
    except OSError as e:
        print(f"I/O error: {e}", file=stream)
        return EXIT_IO
    except ArithmeticError as e:
        print(f"numeric failure: {e}", file=stream)
        return EXIT_NUMERIC
    except (ValueError, KeyError) as e:
        print(f"invalid input: {e}", file=stream)
        return EXIT_VALIDATION
    finally:
        if args.quiet:
            logging.disable(logging.NOTSET)


if __name__ == "__main__":
    sys.exit(main())
