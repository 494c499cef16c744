"""Standalone figure scripts: --in CSV(s) in, --out image out.

Output format follows the --out suffix: .png renders PNG, anything else
renders SVG (the default names end in .svg).  Exit codes: 0 on success,
2 on schema mismatch, usage, or I/O errors.
"""

from __future__ import annotations

import argparse
import sys

from .render import (
    FigureSpec,
    render_frequency,
    render_snapshots,
    render_trajectories,
    save_figure,
)
from .schema import SchemaError


def _format_of(out: str) -> str:
    return "png" if str(out).lower().endswith(".png") else "svg"


def _run(render, spec: FigureSpec) -> int:
    try:
        fig = render()
        save_figure(fig, spec.out, spec.format)
    except (SchemaError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {spec.out}", file=sys.stderr)
    return 0


def fig_frequency_main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="hookwalk-fig-frequency",
        description="Letter-frequency histogram with quarter-circle overlay.",
    )
    parser.add_argument("--in", dest="infile", required=True,
                        help="frequency CSV (letter,count,normalized)")
    parser.add_argument("--out", default="frequency.svg",
                        help="output image (default frequency.svg; .png for PNG)")
    parser.add_argument("--n", type=int, default=None,
                        help="expected letter count; must match the CSV")
    parser.add_argument("--no-overlay", action="store_true",
                        help="suppress the analytic overlay curve")
    args = parser.parse_args(argv)
    spec = FigureSpec((args.infile,), args.out, _format_of(args.out),
                      overlay=not args.no_overlay)
    return _run(
        lambda: render_frequency(args.infile, n=args.n, overlay=spec.overlay),
        spec,
    )


def fig_trajectories_main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="hookwalk-fig-trajectories",
        description="Card-height polylines with a reference line at zero.",
    )
    parser.add_argument("--in", dest="infile", required=True,
                        help="trajectory CSV (t,card,y)")
    parser.add_argument("--out", default="trajectories.svg")
    args = parser.parse_args(argv)
    spec = FigureSpec((args.infile,), args.out, _format_of(args.out))
    return _run(lambda: render_trajectories(args.infile), spec)


def fig_snapshots_main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="hookwalk-fig-snapshots",
        description="Permutation-matrix snapshot panels, +1 red and -1 blue.",
    )
    parser.add_argument("--in", dest="infiles", required=True, nargs="+",
                        help="snapshot CSVs (position,card,sign), in time order")
    parser.add_argument("--out", default="snapshots.svg")
    args = parser.parse_args(argv)
    spec = FigureSpec(tuple(args.infiles), args.out, _format_of(args.out))
    return _run(lambda: render_snapshots(args.infiles), spec)
