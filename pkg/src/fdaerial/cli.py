"""Command-line driver: ``fdaerial <subcommand> [options]``.

Every subcommand writes CSV (header row, ``\\n`` line endings, shortest
round-trip float formatting) to ``--out`` or stdout.

Exit status: 0 success, 1 validation error, 2 non-convergence or
infeasible demand.
"""
from __future__ import annotations

import argparse
import csv
import io
import logging
import sys
from dataclasses import replace

from . import experiments
from .efficiency import InfeasibleTarget
from .scenario import MonteCarlo, ScenarioError, default_scenario, load_scenario

log = logging.getLogger("fdaerial")

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_FAILED = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    if not rows:
        return ""
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(rows[0].keys())
    for row in rows:
        writer.writerow(_fmt(v) for v in row.values())
    return buf.getvalue()


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--scenario", help="scenario JSON file (defaults to the built-in reference setup)")
    p.add_argument("--seed", type=int, help="base seed; snapshot i uses seed + i")
    p.add_argument("--snapshots", type=int, help="Monte Carlo snapshots per sweep point")
    p.add_argument("--out", default="-", help="output path, '-' for stdout")
    p.add_argument("--threads", type=int, default=1, help="maximum parallel sweep points")


def _floats(text: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fdaerial", description="Full-duplex multi-UAV link simulator")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("capacity-sweep", help="downlink capacity vs UAV separation")
    _common(p)
    p.add_argument("--deployment", choices=["linear", "circular"], help="defaults to the scenario's")
    p.add_argument("--sep-min", type=float, default=10.0)
    p.add_argument("--sep-max", type=float, default=500.0)
    p.add_argument("--sep-step", type=float, default=10.0)

    p = sub.add_parser("efficiency", help="radio resource efficiency vs required downlink rate")
    _common(p)
    p.add_argument("--rate-min", type=float, default=5.0, help="Mbps")
    p.add_argument("--rate-max", type=float, default=60.0, help="Mbps")
    p.add_argument("--rate-step", type=float, default=5.0, help="Mbps")
    p.add_argument("--separations", type=_floats, default=[50.0, 100.0, 200.0, 500.0], help="metres, comma-separated")

    p = sub.add_parser("flight-sim", help="interference-aware flight past a hovering partner")
    _common(p)
    p.add_argument("--control", choices=["on", "off"], help="defaults to the scenario's flight.control")

    p = sub.add_parser("power-saving", help="uplink power needed with directional vs omni antennas")
    _common(p)
    p.add_argument("--rate-mbps", type=float, default=20.0, help="target uplink rate")
    return parser


def _scenario(args):
    sc = load_scenario(args.scenario) if args.scenario else default_scenario()
    mc = sc.monte_carlo
    seed = mc.seed if args.seed is None else args.seed
    snaps = mc.snapshots if args.snapshots is None else args.snapshots
    if seed < 0 or seed >= 2**64:
        raise ScenarioError("--seed: must be an unsigned 64-bit integer")
    if snaps < 1:
        raise ScenarioError("--snapshots: must be at least 1")
    if args.threads < 1:
        raise ScenarioError("--threads: must be at least 1")
    return replace(sc, monte_carlo=MonteCarlo(snaps, seed))


def run(args) -> tuple[int, str]:
    sc = _scenario(args)
    status = EXIT_OK
    if args.command == "capacity-sweep":
        dep = args.deployment or sc.deployment.type
        if dep not in ("linear", "circular"):
            raise ScenarioError("--deployment: required when the scenario deployment is explicit")
        rows = experiments.capacity_sweep(sc, dep, args.sep_min, args.sep_max, args.sep_step, args.threads)
    elif args.command == "efficiency":
        rows = experiments.efficiency_sweep(
            sc, args.rate_min, args.rate_max, args.rate_step, args.separations, args.threads
        )
    elif args.command == "flight-sim":
        control = None if args.control is None else args.control == "on"
        traj = experiments.flight_sim(sc, control)
        rows = experiments.flight_rows(traj)
        if not traj.converged:
            log.error("flight did not reach the goal within %d steps", sc.flight.scenario.max_steps)
            status = EXIT_FAILED
    elif args.command == "power-saving":
        if args.rate_mbps < 0:
            raise ScenarioError("--rate-mbps: must be non-negative")
        rows = experiments.power_saving(sc, args.rate_mbps * 1e6)
    else:  # pragma: no cover - argparse rejects unknown commands
        raise ScenarioError(f"unknown command {args.command!r}")
    return status, to_csv(rows)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        status, text = run(args)
    except InfeasibleTarget as exc:
        log.error("%s (limiting power %.2f dBm)", exc, exc.limiting_power_dbm)
        return EXIT_FAILED
    except ValueError as exc:
        log.error("%s", exc)
        return EXIT_INVALID
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
