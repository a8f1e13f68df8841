#!/usr/bin/env python
"""Reproduce the three boundary curves at publication resolution.

Runs the default sweep (p_c = 0.5001, 50 beta points, 3000 alpha points,
both quantifiers) for each slice, writes one CSV per slice plus metadata
sidecars into --outdir, and emits a matplotlib plot script next to them.

This is a thin driver over the ``icbounds sweep`` CLI so the output files
are byte-identical to what the command line produces.  Expect roughly a
minute per slice.
"""

import argparse
import sys
import time
from pathlib import Path

from icbounds.cli import main as icbounds_main


def parse_args(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", type=Path, default=Path("results"))
    parser.add_argument("--pc", type=float, default=0.5001)
    parser.add_argument("--beta-steps", type=int, default=50)
    parser.add_argument("--alpha-steps", type=int, default=3000)
    return parser.parse_args(argv)


def main(argv=None) -> int:
    args = parse_args(argv)
    args.outdir.mkdir(parents=True, exist_ok=True)
    start = time.perf_counter()
    code = icbounds_main(
        [
            "sweep",
            "--slice", "all",
            "--pc", str(args.pc),
            "--beta-steps", str(args.beta_steps),
            "--alpha-steps", str(args.alpha_steps),
            "--out", str(args.outdir / "boundary.csv"),
            "--plot-script",
        ]
    )
    if code != 0:
        return code
    elapsed = time.perf_counter() - start
    print(f"done in {elapsed:.1f}s; render with:")
    print(f"  python {args.outdir / 'plot_curves.py'}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
