"""CH ratio over the (lambda, psi0) plane for two-mode squeezed states.

Writes one CSV per s and prints the fraction of the grid where B_CH > 1.
"""

import argparse
import csv
from pathlib import Path

from phasebell.sweeps import SweepSpec, island_fraction, sweep_lambda


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--s", type=int, nargs="+", default=[3, 7])
    ap.add_argument("--points", type=int, default=200, help="grid points per axis")
    ap.add_argument("--outdir", type=Path, default=Path("results"))
    args = ap.parse_args()

    args.outdir.mkdir(parents=True, exist_ok=True)
    for s in args.s:
        spec = SweepSpec(state_family="tms", s_values=(s,), scheme="single",
                         psi0_grid=args.points, lambda_grid=args.points)
        rows = sweep_lambda(spec)
        path = args.outdir / f"fig3_s{s}.csv"
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["s", "lambda", "psi0", "b_ch"])
            w.writerows([r[0]] + [f"{x:.17g}" for x in r[1:]] for r in rows)
        best = max(rows, key=lambda r: r[3])
        print(f"s={s}: island fraction {island_fraction(r[3] for r in rows):.5f}, "
              f"peak B_CH {best[3]:.6f} at lambda={best[1]:.3f} psi0={best[2]:.4f}  -> {path}")


if __name__ == "__main__":
    main()
