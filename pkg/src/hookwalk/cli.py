"""Command-line surface.

Subcommands: count, prob, sample-corner, word, simulate, verify.
Exit codes: 0 success, 1 verification failure, 2 usage or I/O error,
3 internal invariant breach.  The default seed is 0; the default output
directory is $HOOKWALK_OUTDIR (falling back to the working directory).
Identical arguments produce byte-identical output files.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import export, gates
from .coxeter import longest_element
from .distributions import maxcell_pmf_exact, maxcell_pmf_float
from .network import simulate_stream, snapshot_steps
from .promotion import tableau_to_word
from .rng import RandomStream
from .sampling import corner_distribution_empirical, sample_syt
from .shapes import count_syt, staircase

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_INVARIANT = 3


class InvariantBreach(Exception):
    """An in-process oracle failed on produced output; never silent."""


def _outdir(args) -> Path:
    if getattr(args, "outdir", None):
        return Path(args.outdir)
    return Path(os.environ.get("HOOKWALK_OUTDIR", "."))


def cmd_count(args) -> int:
    print(count_syt(export.parse_shape(args.shape)))
    return EXIT_OK


def cmd_prob(args) -> int:
    table = maxcell_pmf_exact(args.n) if args.exact else maxcell_pmf_float(args.n)
    if args.out:
        with open(args.out, "w", newline="") as f:
            export.write_prob_csv(f, table)
    else:
        export.write_prob_csv(sys.stdout, table)
    return EXIT_OK


def _corner_worker(payload) -> list[int]:
    n, samples, seed, stream, engine = payload
    rng = RandomStream(seed, stream)
    hist = corner_distribution_empirical(staircase(n), samples, rng, engine)
    return [hist.counts[(n - r, n + r)] for r in range(n)]


def cmd_sample_corner(args) -> int:
    n, samples = args.n, args.samples
    if args.streams < 1:
        raise ValueError(f"streams must be >= 1, got {args.streams}")
    shares = [samples // args.streams] * args.streams
    for i in range(samples % args.streams):
        shares[i] += 1
    payloads = [
        (n, share, args.seed, stream, args.engine)
        for stream, share in enumerate(shares)
        if share > 0
    ]
    if len(payloads) > 1:
        with ProcessPoolExecutor(max_workers=len(payloads)) as pool:
            per_stream = list(pool.map(_corner_worker, payloads))
    else:
        per_stream = [_corner_worker(p) for p in payloads]
    counts = [sum(col) for col in zip(*per_stream)]
    exact = [float(p) for p in maxcell_pmf_exact(n).probs]

    out = Path(args.out) if args.out else _outdir(args) / "corner_hist.csv"
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", newline="") as f:
        export.write_corner_csv(f, counts, exact)

    tv = sum(abs(c / samples - p) for c, p in zip(counts, exact)) / 2
    # 5-sigma-style envelope for a multinomial TV fluctuation
    tv_threshold = min(1.0, 5.0 * math.sqrt(n / samples))
    pval = gates.chi2_pvalue(counts, exact)
    reports = [
        gates.StatReport("corner-tv-vs-exact", "tv", tv, tv_threshold,
                         tv < tv_threshold, samples),
        gates.StatReport("corner-chi2-vs-exact", "chi2-p", pval,
                         gates.CHI2_P_THRESHOLD, pval > gates.CHI2_P_THRESHOLD,
                         samples),
    ]
    export.write_stat_csv(sys.stdout, reports)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY


def _word_is_reduced_fast(n, word) -> bool:
    """Same predicate as is_reduced_word_of_w0, via the streaming engine."""
    if len(word) != n * n:
        return False
    res = simulate_stream(n, word, fractions=[1.0], stride=max(1, len(word)),
                          require_reduced=False)
    return tuple(int(c) for c in res.snap_states[-1]) == longest_element(n)


def cmd_word(args) -> int:
    rng = RandomStream(args.seed)
    tableau = sample_syt(staircase(args.n), rng, args.engine)
    word = tableau_to_word(tableau, args.engine)
    if not _word_is_reduced_fast(args.n, word):
        raise InvariantBreach(
            f"produced word of length {len(word)} is not reduced for n={args.n}"
        )
    if args.tableau_out:
        Path(args.tableau_out).write_text(export.tableau_to_json(tableau) + "\n")
    print(export.format_word(word.letters))
    return EXIT_OK


def cmd_simulate(args) -> int:
    fractions = [float(x) for x in args.fractions.split(",")]
    # validate user inputs up front: these are usage errors (exit 2), not
    # invariant breaches like the end-state check below (exit 3)
    snapshot_steps(0, fractions)
    if args.stride is not None and args.stride < 1:
        raise ValueError(f"stride must be >= 1, got {args.stride}")
    rng = RandomStream(args.seed)
    tableau = sample_syt(staircase(args.n), rng, args.engine)
    word = tableau_to_word(tableau, args.engine)
    try:
        result = simulate_stream(args.n, word, fractions, args.stride, args.engine)
    except ValueError as exc:
        raise InvariantBreach(f"sampled word failed the end-state check: {exc}")

    outdir = _outdir(args)
    outdir.mkdir(parents=True, exist_ok=True)
    with open(outdir / "trajectories.csv", "w", newline="") as f:
        export.write_trajectory_csv(f, result.sample_steps, result.heights)
    for idx, frac in enumerate(fractions):
        with open(outdir / f"snapshot_{frac:.4f}.csv", "w", newline="") as f:
            export.write_snapshot_csv(f, result.snapshot(idx))
    with open(outdir / "frequency.csv", "w", newline="") as f:
        export.write_frequency_csv(f, result.letter_counts.tolist())
    print(f"wrote trajectories, {len(fractions)} snapshots, frequency to {outdir}",
          file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    reports = gates.run_gates(args.n_max, args.seed, args.engine)
    export.write_stat_csv(sys.stdout, reports)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hookwalk",
        description="Count, sample, and simulate shifted-staircase tableaux "
        "and type-B sorting networks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, seed=True, engine=True):
        if seed:
            p.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
        if engine:
            p.add_argument("--engine", choices=["auto", "python", "jit"],
                           default="auto", help="sampling engine (default auto)")

    p = sub.add_parser("count", help="exact tableau count of a strict shape")
    p.add_argument("--shape", required=True, help='comma-separated parts, e.g. "4,2,1"')
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("prob", help="pmf of the maximal-cell offset")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--exact", action="store_true", help="print exact rationals p/q")
    p.add_argument("--out", help="write CSV here instead of stdout")
    p.set_defaults(func=cmd_prob)

    p = sub.add_parser("sample-corner", help="hook-walk corner histogram vs exact pmf")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--streams", type=int, default=1, help="parallel RNG streams")
    p.add_argument("--out", help="histogram CSV path (default corner_hist.csv)")
    p.add_argument("--outdir", help="output directory (default $HOOKWALK_OUTDIR or .)")
    add_common(p)
    p.set_defaults(func=cmd_sample_corner)

    p = sub.add_parser("word", help="uniform random reduced word of the longest element")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tableau-out", help="also write the sampled tableau as JSON")
    add_common(p)
    p.set_defaults(func=cmd_word)

    p = sub.add_parser("simulate", help="run a sampled sorting network, export CSVs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--fractions", default="0,0.25,0.5,0.75,1",
                   help="snapshot time fractions (sorted, in [0,1])")
    p.add_argument("--stride", type=int, default=None,
                   help="trajectory down-sampling stride (default ~2000 samples)")
    p.add_argument("--outdir", help="output directory (default $HOOKWALK_OUTDIR or .)")
    add_common(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("verify", help="run every oracle gate, print a report table")
    p.add_argument("--n-max", type=int, default=3, choices=[1, 2, 3, 4])
    add_common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvariantBreach as exc:
        print(f"invariant breach: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
