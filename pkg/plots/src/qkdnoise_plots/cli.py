"""`plot` command: sweep CSVs in, mean-plus-envelope figure out."""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .render import FigureSpec, PlotError, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plot",
        description="Render sweep CSVs as mean curves with min-max envelope bands.",
    )
    parser.add_argument(
        "--csv", action="append", required=True,
        help="input sweep CSV; repeat for one panel per file",
    )
    parser.add_argument(
        "--series", choices=["dk", "party"], required=True,
        help="group rows into curves by (d, k) or by party label",
    )
    parser.add_argument("--out", required=True, help="output image path (png, pdf, svg, ...)")
    parser.add_argument("--dpi", type=int, default=150)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        render(FigureSpec(csv_paths=tuple(args.csv), series=args.series, out=args.out, dpi=args.dpi))
    except (PlotError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
