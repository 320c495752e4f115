"""Run every experiment suite and write one JSON report per suite.

    python scripts/run_suites.py --seed 0 --out results/
"""

import argparse
from pathlib import Path

from clustercol.harness import SUITES, SuiteConfig, report_store, run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default="results")
    ap.add_argument("suites", nargs="*", default=sorted(SUITES))
    args = ap.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    failed = 0
    for name in args.suites:
        report = run_suite(name, SuiteConfig(seed=args.seed))
        report_store(report, out / f"{name}.json")
        counts = {}
        for c in report.claims:
            counts[c.status] = counts.get(c.status, 0) + 1
        print(f"{name:11s} {report.status:5s} {report.timings['seconds']:7.2f}s  {counts}")
        for c in report.claims:
            if c.status == "fail":
                print(f"    {c.id}: expected {c.expected}, observed {c.observed}")
        failed += not report.ok
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
