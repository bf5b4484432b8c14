"""Command line interface: sweeps, convergence traces, and config validation."""

from __future__ import annotations

import argparse
import sys

from .errors import ConfigurationError, FeasibilityError
from .experiments import (AXES, SCHEMES, SweepSpec, run_sweep, trace_rows,
                          write_csv)
from .scenario import load_config_file

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_SPEC = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fa-aircomp",
        description="Aggregation-error minimization for a movable receive array: "
                    "run parameter sweeps, dump convergence traces, or check a config file.")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a sweep and write a CSV")
    run.add_argument("--config", required=True, help="flat key-value config file")
    run.add_argument("--sweep", required=True, choices=AXES, help="sweep axis")
    run.add_argument("--values", required=True,
                     help="comma-separated axis values, ascending")
    run.add_argument("--schemes", required=True,
                     help=f"comma-separated subset of {','.join(SCHEMES)}")
    run.add_argument("--seeds", required=True, type=int,
                     help="number of seeds; seed i of n is config seed + i")
    run.add_argument("--out", required=True, help="output CSV path")
    run.add_argument("--label", default="",
                     help="suffix appended to scheme names in the output rows")

    trace = sub.add_parser("trace", help="write per-round error traces for one seed")
    trace.add_argument("--config", required=True)
    trace.add_argument("--seed", type=int, default=None,
                       help="scenario seed (default: the config file's seed)")
    trace.add_argument("--out", required=True)

    validate = sub.add_parser("validate", help="parse and check a config file")
    validate.add_argument("--config", required=True)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config, base_seed = load_config_file(args.config)
    except ConfigurationError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    if args.command == "validate":
        print(f"ok: N={config.n_antennas} K={config.n_users} "
              f"L={config.region_length:g} L0={config.min_spacing:g} "
              f"beta={config.distortion_level:g} xi={config.move_cost:g} "
              f"seed={base_seed}")
        return EXIT_OK

    if args.command == "run":
        try:
            raw_values = [v for v in args.values.split(",") if v.strip()]
            if args.sweep == "distortion_level":
                values = tuple(float(v) for v in raw_values)
            else:
                values = tuple(int(v) for v in raw_values)
            schemes = tuple(s.strip() for s in args.schemes.split(",") if s.strip())
            seeds = tuple(base_seed + i for i in range(args.seeds))
            spec = SweepSpec(axis=args.sweep, values=values, schemes=schemes,
                             seeds=seeds, base_config=config, label=args.label)
        except (ValueError, ConfigurationError, FeasibilityError) as exc:
            print(f"sweep spec error: {exc}", file=sys.stderr)
            return EXIT_SPEC
        write_csv(args.out, run_sweep(spec))
        return EXIT_OK

    seed = base_seed if args.seed is None else args.seed
    write_csv(args.out, trace_rows(config, seed))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
