"""Command line interface for figure rendering."""

from __future__ import annotations

import argparse
import sys

from .render import FIGURES, DataError, SchemaError, render

EXIT_OK = 0
EXIT_ERROR = 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aircomp-figures",
        description="Render line figures from sweep result CSV files.")
    sub = parser.add_subparsers(dest="command", required=True)
    ren = sub.add_parser("render", help="render one figure from a CSV")
    ren.add_argument("--csv", required=True, help="sweep results file")
    ren.add_argument("--figure", required=True, choices=sorted(FIGURES),
                     help="which figure to draw")
    ren.add_argument("--out", required=True, help="output image path")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        summary = render(args.csv, args.figure, args.out)
    except (SchemaError, DataError) as exc:
        print(f"figure error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"file error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    print(f"wrote {summary.out_path}: {len(summary.schemes)} series, "
          f"{summary.n_points} points")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
