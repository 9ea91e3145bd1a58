"""Command line entry: render sweep CSV files to per-benchmark figures."""

from __future__ import annotations

import argparse
import sys

from .render import PlotSpec, render


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="plots",
        description="Render yield vs. performance scatter figures from a sweep CSV",
    )
    parser.add_argument("--csv", required=True, help="sweep CSV path")
    parser.add_argument("--out", required=True, help="output directory")
    scale = parser.add_mutually_exclusive_group()
    scale.add_argument("--log-y", action="store_true", default=None,
                       help="log-scale yield axis (default)")
    scale.add_argument("--linear-y", action="store_true",
                       help="linear yield axis")
    parser.add_argument("--svg", action="store_true", help="also write SVG")
    args = parser.parse_args(argv)

    spec = PlotSpec(
        csv_path=args.csv,
        out_dir=args.out,
        y_scale="linear" if args.linear_y else "log",
        formats=("png", "svg") if args.svg else ("png",),
    )
    written = render(spec)
    for benchmark, paths in sorted(written.items()):
        for path in paths:
            print(f"{benchmark}: {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
