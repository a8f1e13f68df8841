"""Command-line front end: evaluate points, run sweeps, run verification.

Exit codes: 0 success, 1 invalid arguments, 2 verification failure,
3 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from pathlib import Path

import numpy as np

from . import __version__
from .infotheory import channel_capacity, mutual_information
from .protocol import SlicePoint, table1_joints
from .redundancy import ic_rac, redundant_information
from .sweep import SweepConfig, run_sweep
from . import verify as verify_mod

SLICES = ("slice1", "slice2", "slice3")


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits with 2
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(1)


def _fmt(v: float) -> str:
    return f"{v:.12g}"


def _build_parser() -> _Parser:
    parser = _Parser(prog="icbounds", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    ev = sub.add_parser("evaluate", help="evaluate one slice point")
    ev.add_argument("--slice", required=True, choices=SLICES)
    ev.add_argument("--alpha", type=float, required=True)
    ev.add_argument("--beta", type=float, required=True)
    ev.add_argument("--pc", type=float, default=0.5001)
    ev.add_argument("--lambda-tol", type=float, default=1e-10)
    ev.add_argument("--grid-lambda", type=int, default=None,
                    help="replace the golden-section search by an even lambda grid of this size")

    sw = sub.add_parser("sweep", help="trace boundary curves")
    sw.add_argument("--slice", required=True, choices=SLICES + ("all",))
    sw.add_argument("--pc", type=float, default=0.5001)
    sw.add_argument("--beta-steps", type=int, default=50)
    sw.add_argument("--alpha-steps", type=int, default=3000)
    sw.add_argument("--lambda-tol", type=float, default=1e-10)
    sw.add_argument("--grid-lambda", type=int, default=None)
    sw.add_argument("--quantifier", choices=("ICR", "ICO", "both"), default="both")
    sw.add_argument("--out", default="boundary.csv")
    sw.add_argument("--format", choices=("csv", "json"), default="csv")
    sw.add_argument("--seed", type=int, default=0,
                    help="recorded in the metadata sidecar; sweeps are deterministic")
    sw.add_argument("--refine", action="store_true",
                    help="bisection refinement of the grid crossing")
    sw.add_argument("--plot-script", action="store_true",
                    help="also emit a matplotlib script next to the output")

    ve = sub.add_parser("verify", help="run verification suites")
    ve.add_argument("--suite", choices=("properties", "oracles", "all"), default="all")
    ve.add_argument("--seed", type=int, default=0)
    return parser


def _cmd_evaluate(args) -> int:
    try:
        pt = SlicePoint(args.slice, args.alpha, args.beta, args.pc)
    except ValueError as exc:
        print(f"icbounds: error: {exc}", file=sys.stderr)
        return 1
    opts = {"tol": args.lambda_tol}
    if args.grid_lambda is not None:
        opts = {"method": "grid", "grid_n": args.grid_lambda}
    j1, j2 = table1_joints(pt)
    i1 = mutual_information(j1)
    i2 = mutual_information(j2)
    i_r = redundant_information(j1, j2, **opts)
    red = i1 + i2 - i_r
    rac = ic_rac(j1, j2)
    k = channel_capacity(args.pc)
    print(f"slice={pt.slice_id} alpha={_fmt(pt.alpha)} beta={_fmt(pt.beta)} p_c={_fmt(pt.p_c)}")
    print(f"I(A;B1)  = {_fmt(i1)}")
    print(f"I(A;B2)  = {_fmt(i2)}")
    print(f"I_r      = {_fmt(i_r)}")
    print(f"IC_red   = {_fmt(red)}")
    print(f"IC_RAC   = {_fmt(rac)}")
    print(f"k        = {_fmt(k)}")
    print(f"IC_red verdict: {'violated' if red > k else 'satisfied'}")
    print(f"IC_RAC verdict: {'violated' if rac > k else 'satisfied'}")
    return 0


def _result_fields(res):
    if res is None:
        return "", None
    if res.status == "all_violate":
        return "", None
    return _fmt(res.alpha), res.status


def _curve_rows(curve):
    rows = []
    for row in curve.rows:
        icr_alpha, icr_status = _result_fields(row.icr)
        ico_alpha, ico_status = _result_fields(row.ico)
        flags = []
        if icr_status == "no_violation":
            flags.append("icr")
        if ico_status == "no_violation":
            flags.append("ico")
        rows.append(
            {
                "slice": curve.config.slice_id,
                "beta": _fmt(row.beta),
                "alpha_icr": icr_alpha,
                "alpha_ico": ico_alpha,
                "alpha_quantum": "" if row.alpha_quantum is None else _fmt(row.alpha_quantum),
                "no_violation": ";".join(flags),
            }
        )
    return rows


_HEADER = ["slice", "beta", "alpha_icr", "alpha_ico", "alpha_quantum", "no_violation"]


def _write_curve(curve, out: Path, fmt: str, meta: dict):
    rows = _curve_rows(curve)
    try:
        if fmt == "csv":
            with out.open("w", newline="") as fh:
                writer = csv.DictWriter(fh, fieldnames=_HEADER)
                writer.writeheader()
                writer.writerows(rows)
        else:
            with out.open("w") as fh:
                json.dump(rows, fh, indent=2)
                fh.write("\n")
        sidecar = out.with_suffix(out.suffix + ".meta.json")
        with sidecar.open("w") as fh:
            json.dump(meta, fh, indent=2)
            fh.write("\n")
    except OSError as exc:
        for p in (out, out.with_suffix(out.suffix + ".meta.json")):
            p.unlink(missing_ok=True)
        raise RuntimeError(f"writing {out}: {exc}") from exc


_PLOT_TEMPLATE = """\
#!/usr/bin/env python
\"\"\"Render the boundary curves written by `icbounds sweep`.\"\"\"
import csv
import sys

import matplotlib.pyplot as plt

paths = sys.argv[1:] or {paths!r}
fig, axes = plt.subplots(len(paths), 1, figsize=(5, 4 * len(paths)), squeeze=False)
for ax, path in zip(axes[:, 0], paths):
    rows = list(csv.DictReader(open(path)))
    beta = [float(r["beta"]) for r in rows]
    for key, style, label in [
        ("alpha_icr", "o-", "ICR"),
        ("alpha_ico", "s-", "ICO"),
        ("alpha_quantum", "k--", "quantum"),
    ]:
        xs = [b for b, r in zip(beta, rows) if r[key]]
        ys = [float(r[key]) for r in rows if r[key]]
        ax.plot(xs, ys, style, ms=3, label=label)
    ax.set_xlabel("beta")
    ax.set_ylabel("alpha")
    ax.set_title(rows[0]["slice"] if rows else path)
    ax.legend()
fig.tight_layout()
fig.savefig("boundary_curves.png", dpi=150)
print("wrote boundary_curves.png")
"""


def _cmd_sweep(args) -> int:
    slices = SLICES if args.slice == "all" else (args.slice,)
    quantifiers = ("ICR", "ICO") if args.quantifier == "both" else (args.quantifier,)
    lambda_method = "golden" if args.grid_lambda is None else "grid"
    grid_lambda = args.grid_lambda if args.grid_lambda is not None else 1000
    out = Path(args.out)
    outputs = []
    try:
        for slice_id in slices:
            cfg = SweepConfig(
                slice_id=slice_id,
                p_c=args.pc,
                beta_steps=args.beta_steps,
                alpha_steps=args.alpha_steps,
                quantifiers=quantifiers,
                lambda_method=lambda_method,
                lambda_tol=args.lambda_tol,
                grid_lambda=grid_lambda,
                refine=args.refine,
            )
            path = out if len(slices) == 1 else out.with_name(
                f"{out.stem}_{slice_id}{out.suffix or '.csv'}"
            )
            start = time.perf_counter()
            curve = run_sweep(cfg)
            meta = {
                "config": {
                    "slice": slice_id,
                    "p_c": args.pc,
                    "beta_steps": args.beta_steps,
                    "alpha_steps": args.alpha_steps,
                    "quantifiers": list(quantifiers),
                    "lambda_method": lambda_method,
                    "lambda_tol": args.lambda_tol,
                    "grid_lambda": grid_lambda,
                    "refine": args.refine,
                    "seed": args.seed,
                },
                "versions": {
                    "icbounds": __version__,
                    "python": sys.version.split()[0],
                    "numpy": np.__version__,
                },
                "runtime_seconds": round(time.perf_counter() - start, 3),
            }
            _write_curve(curve, path, args.format, meta)
            outputs.append(path)
            print(f"wrote {path}")
    except ValueError as exc:
        print(f"icbounds: error: {exc}", file=sys.stderr)
        return 1
    except RuntimeError as exc:
        print(f"icbounds: I/O error: {exc}", file=sys.stderr)
        return 3
    if args.plot_script:
        script = out.with_name("plot_curves.py")
        try:
            script.write_text(_PLOT_TEMPLATE.format(paths=[str(p) for p in outputs]))
        except OSError as exc:
            print(f"icbounds: I/O error: writing {script}: {exc}", file=sys.stderr)
            return 3
        print(f"wrote {script}")
    return 0


def _cmd_verify(args) -> int:
    results = verify_mod.run(args.suite, seed=args.seed)
    ok = True
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        print(f"[{status}] {res.name}: {res.detail}")
        ok = ok and res.passed
    print(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    return 0 if ok else 2


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "evaluate":
        return _cmd_evaluate(args)
    if args.command == "sweep":
        return _cmd_sweep(args)
    return _cmd_verify(args)


def entry():  # console-script shim
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
