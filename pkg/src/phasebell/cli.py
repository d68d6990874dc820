"""Command line front end: ``phasebell {dist,bell,sweep-s,sweep-lambda,lhv-check}``.

Exit status is 0 on success, 2 for bad flags or input files and 1 for
numeric failures such as a vanishing CH denominator.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import sys
from typing import Sequence

from . import lhv
from .bell import Functional, evaluate, optimize_psi
from .fock import read_coeff_file
from .phase import Normalization, PhaseGrid, joint_distribution
from .sweeps import STATE_FAMILIES, SweepSpec, sweep_lambda, sweep_s

EXIT_NUMERIC = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def fmt(x: float) -> str:
    return f"{x:.17g}"


def parse_s_values(text: str) -> tuple[int, ...]:
    """``3``, ``1,3,5`` or inclusive ranges ``start:stop[:step]``."""
    values: list[int] = []
    try:
        for part in text.split(","):
            part = part.strip()
            if ":" in part:
                bits = [int(b) for b in part.split(":")]
                if len(bits) not in (2, 3) or (len(bits) == 3 and bits[2] <= 0):
                    raise ValueError
                step = bits[2] if len(bits) == 3 else 1
                values.extend(range(bits[0], bits[1] + 1, step))
            elif part:
                values.append(int(part))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad s list {text!r}") from None
    if not values or min(values) < 0:
        raise argparse.ArgumentTypeError(f"s values must be nonnegative integers: {text!r}")
    return tuple(values)


def _common(p: argparse.ArgumentParser, s_default: str | None = None, scheme: str = "single"):
    p.add_argument("--state", choices=STATE_FAMILIES, default="equal")
    p.add_argument("--s", type=parse_s_values, default=s_default, required=s_default is None,
                   help="resolution(s): 3, 1,3,5 or 1:201:2")
    p.add_argument("--scheme", default=scheme, help="equal, single or custom:i,j,...")
    p.add_argument("--lambda", dest="lam", type=float, help="tms parameter in [0, 1)")
    p.add_argument("--r", type=float, help="circle-state amplitude")
    p.add_argument("--coeffs", help="custom coefficient file")
    p.add_argument("--mode", choices=[m.value for m in Normalization], default="raw")
    p.add_argument("--out", help="output path (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="phasebell", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", help="joint phase distribution as CSV")
    _common(p)
    p.add_argument("--psi0", type=float, default=0.0)

    p = sub.add_parser("bell", help="B_CH and B_S at one angle or optimized")
    _common(p)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--psi0", type=float)
    g.add_argument("--optimize", action="store_true")
    p.add_argument("--functional", choices=[f.value for f in Functional], default="ch",
                   help="functional maximized by --optimize")
    p.add_argument("--psi-points", type=int, default=2000)

    p = sub.add_parser("sweep-s", help="max B_CH versus s")
    _common(p, s_default="1:201:2")
    p.add_argument("--psi-points", type=int, default=2000)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("sweep-lambda", help="B_CH over the (lambda, psi0) plane")
    _common(p, s_default="3,7")
    p.set_defaults(state="tms")
    p.add_argument("--psi-points", type=int, default=200)
    p.add_argument("--lambda-points", type=int, default=200)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("lhv-check", help="classical bounds by exhaustive enumeration")
    p.add_argument("--out", help="output path (default stdout)")
    return parser


def _spec(args, **extra) -> SweepSpec:
    coeffs = None
    if args.state == "custom":
        if not args.coeffs:
            raise UsageError("--state custom requires --coeffs PATH")
        try:
            coeffs = read_coeff_file(args.coeffs)
        except OSError as exc:
            raise UsageError(f"cannot read {args.coeffs}: {exc.strerror}") from None
    return SweepSpec(
        state_family=args.state, s_values=args.s, scheme=args.scheme,
        lam=args.lam, r=args.r, coeffs=coeffs, mode=Normalization(args.mode), **extra,
    )


def _single_s(args) -> int:
    if len(args.s) != 1:
        raise UsageError(f"{args.command} takes a single --s value")
    return args.s[0]


def _writer(fh):
    return csv.writer(fh, lineterminator="\n")


def cmd_dist(args, fh):
    s = _single_s(args)
    spec = _spec(args)
    dist = joint_distribution(spec.state(s), PhaseGrid.from_psi0(s, args.psi0), spec.mode)
    dist.to_csv(fh)


def cmd_bell(args, fh):
    s = _single_s(args)
    spec = _spec(args)
    state, scheme = spec.state(s), spec.binning(s)
    if args.optimize:
        ev = optimize_psi(state, s, scheme, args.functional, spec.mode, args.psi_points)
    else:
        if args.psi0 is None:
            raise UsageError("bell needs --psi0 or --optimize")
        ev = evaluate(state, s, scheme, args.psi0, spec.mode)
    w = _writer(fh)
    w.writerow(["s", "scheme", "psi0", "b_ch", "b_s", "violates_ch", "violates_s"])
    w.writerow([s, scheme.label, fmt(ev.psi0), fmt(ev.b_ch), fmt(ev.b_s),
                str(ev.violates_ch).lower(), str(ev.violates_s).lower()])


def cmd_sweep_s(args, fh):
    spec = _spec(args, psi0_grid=args.psi_points)
    w = _writer(fh)
    w.writerow(["s", "psi0_opt", "b_ch_max"])
    for s, psi, b in sweep_s(spec, args.jobs):
        w.writerow([s, fmt(psi), fmt(b)])


def cmd_sweep_lambda(args, fh):
    spec = _spec(args, psi0_grid=args.psi_points, lambda_grid=args.lambda_points)
    w = _writer(fh)
    w.writerow(["s", "lambda", "psi0", "b_ch"])
    for s, lam, psi, b in sweep_lambda(spec, args.jobs):
        w.writerow([s, fmt(lam), fmt(psi), fmt(b)])


def cmd_lhv_check(args, fh) -> int:
    max_bs, max_ch = lhv.enumerate_lhv_bounds()
    ok = max_bs == 2.0 and max_ch == 1.0
    w = _writer(fh)
    w.writerow(["max_abs_b_s", "max_abs_b_ch", "status"])
    w.writerow([fmt(max_bs), fmt(max_ch), "PASS" if ok else "FAIL"])
    return 0 if ok else EXIT_NUMERIC


COMMANDS = {
    "dist": cmd_dist,
    "bell": cmd_bell,
    "sweep-s": cmd_sweep_s,
    "sweep-lambda": cmd_sweep_lambda,
    "lhv-check": cmd_lhv_check,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with contextlib.ExitStack() as stack:
            fh = sys.stdout
            if args.out:
                fh = stack.enter_context(open(args.out, "w", encoding="utf-8", newline=""))
            return COMMANDS[args.command](args, fh) or 0
    except (UsageError, ValueError, IndexError) as exc:
        print(f"phasebell: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as exc:
        print(f"phasebell: numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
