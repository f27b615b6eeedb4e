"""Run every named suite and write one JSON report per suite.

    python scripts/run_all_suites.py [--seed N] [--out DIR]

Exit status is 1 if any suite has a failed check.
"""

import argparse
import sys
import time
from pathlib import Path

from gradedquot.suites import SUITES, SuiteConfig, run_suite


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default="reports")
    args = ap.parse_args(argv)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    worst = 0
    for name in SUITES:
        t0 = time.perf_counter()
        report = run_suite(name, SuiteConfig(seed=args.seed))
        (out / f"{name}.json").write_text(report.dumps() + "\n")
        counts = report.counts()
        print(f"{name:20s} {counts['pass']:3d} pass {counts['fail']:2d} fail "
              f"{counts['inconclusive']:2d} inconclusive  {time.perf_counter() - t0:6.2f}s")
        for c in report.failed:
            print(f"    FAIL {c.name}: {c.reason or c.actual}")
        worst = max(worst, 0 if report.success else 1)
    return worst


if __name__ == "__main__":
    sys.exit(main())
