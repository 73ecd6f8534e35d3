#!/usr/bin/env python3
"""Run verification suites and print a human-readable summary table.

Usage: python scripts/verify_report.py [suite ...]   (default: all suites)
"""

import sys
import time

from qplane.verify import SUITES, run_suite


def main():
    names = sys.argv[1:] or list(SUITES)
    all_ok = True
    for name in names:
        t0 = time.time()
        recs = run_suite(name)
        dt = time.time() - t0
        ok = all(r["pass"] for r in recs)
        all_ok = all_ok and ok
        print(f"\n{name}  ({len(recs)} checks, {dt:.1f}s)  "
              f"{'ALL PASS' if ok else 'FAILURES'}")
        for r in recs:
            mark = "ok  " if r["pass"] else "FAIL"
            print(f"  {mark} {r['name']:45s} {r['params']:32s} "
                  f"{r['residual']:.3e} (tol {r['tol']:.0e})")
    sys.exit(0 if all_ok else 1)


if __name__ == "__main__":
    main()
