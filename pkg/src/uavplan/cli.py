"""Command-line front end.

Units everywhere: angles in degrees, distances in meters, powers in dBm.
JSON output carries full float precision; CSV output prints numbers with six
significant digits.
"""
from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import logging
import sys
from typing import Sequence

from . import __version__
from .channel import LinkGeometry
from .coverage import CoverageQuery, coverage_probability
from .errors import (
    BeamFootprintViolation, DomainError, Infeasible, NoCoverage, NonMonotone, PlanningError,
    ScenarioError, Unreachable, Unsupported,
)
from .montecarlo import simulate_coverage
from .packing import layout
from .planner import min_uav_count, plan, sweep_vs_m, sweep_vs_rc
from .scenario import load_scenario
from .solver import coverage_radius, min_transmit_power

log = logging.getLogger("uavplan")

EXIT_OK, EXIT_PARSE, EXIT_INFEASIBLE, EXIT_NUMERIC = 0, 2, 3, 4

_EXIT_CODES = [
    ((ScenarioError, DomainError, Unsupported), EXIT_PARSE),
    ((Infeasible, Unreachable, NoCoverage, BeamFootprintViolation), EXIT_INFEASIBLE),
    ((NonMonotone,), EXIT_NUMERIC),
]


def format_number(value) -> str:
    if isinstance(value, bool) or value is None:
        return "" if value is None else str(value).lower()
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\r\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: format_number(v) for k, v in row.items()})
    return buf.getvalue()


def to_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _emit(args, rows: list[dict], single: bool = True) -> None:
    if args.format == "csv":
        text = to_csv(rows)
    else:
        text = to_json(rows[0] if single and len(rows) == 1 else rows)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def parse_range(spec: str) -> list[float]:
    """Parse ``a..b`` (integers, inclusive), ``start:stop:step`` or a comma list."""
    try:
        if ".." in spec:
            a, b = spec.split("..")
            return [float(v) for v in range(int(a), int(b) + 1)]
        if ":" in spec:
            start, stop, step = (float(v) for v in spec.split(":"))
            if step <= 0:
                raise ValueError("step must be positive")
            out, k = [], 0
            while start + k * step <= stop + 1e-9 * abs(step):
                out.append(start + k * step)
                k += 1
            return out
        return [float(v) for v in spec.split(",")]
    except ValueError as exc:
        raise ScenarioError(f"--range {spec!r}: {exc}") from exc


def cmd_coverage(args, sc):
    radio = sc.radio if args.tx_power is None else dataclasses.replace(sc.radio, tx_power_dbm=args.tx_power)
    p = coverage_probability(CoverageQuery(LinkGeometry(args.r, args.h), sc.env, radio))
    _emit(args, [{"r_m": args.r, "h_m": args.h, "tx_power_dbm": radio.tx_power_dbm, "p_cov": p}])


def cmd_radius(args, sc):
    radio = sc.radio if args.tx_power is None else dataclasses.replace(sc.radio, tx_power_dbm=args.tx_power)
    sol = coverage_radius(radio, sc.env, args.h)
    _emit(args, [{"h_m": args.h, "tx_power_dbm": radio.tx_power_dbm, "radius_m": sol.radius_m,
                  "binding": sol.binding.value, "pcov_at_radius": sol.pcov_at_radius}])


def cmd_power(args, sc):
    p = min_transmit_power(args.r, sc.radio, sc.env, args.h)
    _emit(args, [{"r_m": args.r, "h_m": args.h, "tx_power_dbm": p}])


def cmd_plan(args, sc):
    result = plan(sc.area_radius_m, args.m, sc.env, sc.radio, sc.constraints)
    if args.format == "csv":
        rows = [{"uav": i + 1, "x_m": x, "y_m": y, "h_m": z, "radius_m": result.per_uav_radius_m,
                 "tx_power_dbm": result.tx_power_dbm} for i, (x, y, z) in enumerate(result.positions)]
        _emit(args, rows, single=False)
    else:
        _emit(args, [result.to_dict()])


def cmd_min_uavs(args, sc):
    m = min_uav_count(sc.area_radius_m, args.threshold, sc.env, sc.radio, sc.constraints, m_min=args.m_min)
    if m is None:
        raise Infeasible(f"no UAV count in {args.m_min}..10 covers {args.threshold} of the area")
    _emit(args, [{"area_radius_m": sc.area_radius_m, "threshold": args.threshold, "uav_count": m}])


def cmd_sweep(args, sc):
    values = parse_range(args.range)
    if args.axis == "m":
        rows = sweep_vs_m(sc.area_radius_m, [int(v) for v in values], sc.env, sc.radio,
                          sc.constraints, workers=args.workers)
        out = [{"uav_count": int(r.key), "total_coverage": r.total_coverage, "lifetime": r.lifetime,
                "altitude_m": r.altitude_m, "tx_power_dbm": r.tx_power_dbm, "error": r.error} for r in rows]
    else:
        if args.threshold is None:
            raise ScenarioError("--threshold is required for --axis rc")
        rows = sweep_vs_rc(values, args.threshold, sc.env, sc.radio, sc.constraints, workers=args.workers)
        out = [{"area_radius_m": r.key, "uav_count": r.uav_count, "error": r.error} for r in rows]
    _emit(args, out, single=False)


def cmd_validate(args, sc):
    radio = sc.radio if args.tx_power is None else dataclasses.replace(sc.radio, tx_power_dbm=args.tx_power)
    q = CoverageQuery(LinkGeometry(args.r, args.h), sc.env, radio)
    res = simulate_coverage(q, args.n, args.seed, workers=args.workers)
    row = res.to_dict()
    row["analytic_pcov"] = coverage_probability(q)
    _emit(args, [row])


def cmd_layout(args, sc):
    lay = layout(args.m)
    if args.format == "csv":
        _emit(args, [{"index": i, "x_norm": x, "y_norm": y, "radius_norm": lay.radius_norm}
                     for i, (x, y) in enumerate(lay.centers_norm)], single=False)
    else:
        _emit(args, [lay.to_dict()])


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--scenario", metavar="FILE",
                        help="TOML scenario (default: urban 2 GHz, R_c = 5000 m)")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", metavar="FILE", help="write output here instead of stdout")
    common.add_argument("--seed", type=int, default=0, help="Monte-Carlo seed")
    common.add_argument("--workers", type=int, default=1, help="worker threads for sweeps/sampling")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="uavplan",
        description="Plan multi-UAV base-station deployments over a circular area. "
                    "Angles in degrees, distances in meters, powers in dBm.",
        epilog="exit codes: 0 ok, 2 parse/input error, 3 infeasible, 4 numeric failure")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coverage", parents=[common], help="coverage probability at range r, altitude h")
    p.add_argument("--r", type=float, required=True, help="horizontal range (m)")
    p.add_argument("--h", type=float, required=True, help="altitude (m)")
    p.add_argument("--tx-power", type=float, help="override transmit power (dBm)")
    p.set_defaults(func=cmd_coverage)

    p = sub.add_parser("radius", parents=[common], help="maximum coverage radius at altitude h")
    p.add_argument("--h", type=float, required=True, help="altitude (m)")
    p.add_argument("--tx-power", type=float, help="override transmit power (dBm)")
    p.set_defaults(func=cmd_radius)

    p = sub.add_parser("power", parents=[common], help="minimum transmit power to cover radius r")
    p.add_argument("--r", type=float, required=True, help="required radius (m)")
    p.add_argument("--h", type=float, required=True, help="altitude (m)")
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("plan", parents=[common], help="deployment plan for M UAVs")
    p.add_argument("--m", type=int, required=True, help="number of UAVs (1..10)")
    p.set_defaults(func=cmd_plan)

    p = sub.add_parser("min-uavs", parents=[common], help="fewest UAVs meeting an area-coverage threshold")
    p.add_argument("--threshold", type=float, required=True, help="covered fraction of the area")
    p.add_argument("--m-min", type=int, default=1, help="smallest UAV count to consider")
    p.set_defaults(func=cmd_min_uavs)

    p = sub.add_parser("sweep", parents=[common], help="sweep UAV count or area radius")
    p.add_argument("--axis", choices=("m", "rc"), required=True)
    p.add_argument("--range", required=True, help="a..b, start:stop:step, or comma list")
    p.add_argument("--threshold", type=float, help="coverage threshold (axis rc)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("validate", parents=[common], help="Monte-Carlo check of coverage probability")
    p.add_argument("--r", type=float, required=True, help="horizontal range (m)")
    p.add_argument("--h", type=float, required=True, help="altitude (m)")
    p.add_argument("--n", type=int, default=100_000, help="samples")
    p.add_argument("--tx-power", type=float, help="override transmit power (dBm)")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("layout", parents=[common], help="normalized packing layout for M UAVs")
    p.add_argument("--m", type=int, required=True, help="number of UAVs (1..10)")
    p.set_defaults(func=cmd_layout)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        scenario = load_scenario(args.scenario)
        args.func(args, scenario)
    except PlanningError as exc:
        for types, code in _EXIT_CODES:
            if isinstance(exc, types):
                break
        else:
            code = EXIT_NUMERIC
        print(f"uavplan: {type(exc).__name__}: {exc}", file=sys.stderr)
        return code
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
