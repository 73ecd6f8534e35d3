#!/usr/bin/env python3
"""Generate the three classical-limit convergence tables as CSV.

Writes glim.csv, kernel_limit.csv, coaction_limit.csv into --outdir (default
./tables).  Each row is one (point, r) pair with its residual against the
classical target; residuals should decrease down each r-schedule column.
"""

import argparse
import csv
import pathlib

from qplane import corep, qtransform
from qplane import qdilog as qd

R_SCHEDULE = [0.1, 0.05, 0.025, 0.0125, 1e-3]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default="tables")
    ap.add_argument("--r-schedule", default=",".join(str(r) for r in R_SCHEDULE))
    args = ap.parse_args()
    rs = [float(t) for t in args.r_schedule.split(",")]
    outdir = pathlib.Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    with open(outdir / "glim.csv", "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["x_re", "x_im", "r", "residual"])
        for x in (0.5, 1.0, 1.5, 1 + 0.3j):
            for r in rs:
                w.writerow([complex(x).real, complex(x).imag, r,
                            qd.classical_limit_residual("Glim", x, r)])

    with open(outdir / "kernel_limit.csv", "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["lam", "t1", "t2", "r", "residual"])
        for lam in (0.3, 0.5, 0.7):
            for r in rs:
                w.writerow([lam, 1.0, 1.5, r,
                            qtransform.kernel_limit_residual(lam, 1.0, 1.5, r)])

    with open(outdir / "coaction_limit.csv", "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["x", "z", "r", "residual"])
        for (x, z) in ((0.3, 0.9), (0.0, 0.5), (-0.2, 0.4)):
            for r in rs:
                w.writerow([x, z, r, corep.coaction_limit_residual(x, z, r)])

    print(f"wrote {outdir}/glim.csv, {outdir}/kernel_limit.csv, {outdir}/coaction_limit.csv")


if __name__ == "__main__":
    main()
