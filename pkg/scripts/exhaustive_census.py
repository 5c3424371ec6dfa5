#!/usr/bin/env python3
"""Run the exhaustive check and write the summary plus machine records.

    python3 scripts/exhaustive_census.py --max-n 7 --out results/census_n7.txt
"""

import argparse
import sys
import time
from pathlib import Path

from siginertia.verify.report import format_summary, summary_records
from siginertia.verify.suite import SuiteOptions, run_suite


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--include-n8", action="store_true", help="allow --max-n 8 (minutes per core)")
    ap.add_argument("--all-skeletons", action="store_true", help="include disconnected skeletons")
    ap.add_argument("--lemmas", default="pendant,additivity,local_stats", help="comma list, empty for none")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", type=Path)
    args = ap.parse_args(argv)

    opts = SuiteOptions(
        connected_only=not args.all_skeletons,
        include_n8=args.include_n8,
        lemmas=tuple(x for x in args.lemmas.split(",") if x),
        seed=args.seed,
        workers=args.workers,
    )
    t0 = time.perf_counter()
    summary = run_suite(args.max_n, opts)
    elapsed = time.perf_counter() - t0

    text = format_summary(summary) + f"\nelapsed_s           {elapsed:.1f}\n"
    print(text)
    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(text + "\n" + "\n".join(summary_records(summary)) + "\n")
    return 0 if summary.ok else 1


if __name__ == "__main__":
    sys.exit(main())
