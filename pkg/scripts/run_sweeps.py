#!/usr/bin/env python3
"""Run the exhaustive verification sweeps and print a summary table.

Equivalent to ``rookbij verify`` but handy to tweak when experimenting with
larger bounds, e.g. ``python scripts/run_sweeps.py --max-n 6 --parallel 4``.
"""

import argparse
import sys

from rookbij.enumeration import THEOREM_TAGS, default_sweep, verify

DESCRIPTIONS = {
    "l1": "marker counts in R(V) are placement-independent",
    "t1": "border sequences determine avoiding placements",
    "t2": "the 231-/312-conditions characterize realizable sequences",
    "t4": "alpha and beta are mutually inverse bijections",
    "remark": "partial placements biject class-by-class",
}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=None,
                        help="sweep bound; defaults vary per check")
    parser.add_argument("--theorem", default="all", choices=THEOREM_TAGS + ("all",))
    parser.add_argument("--parallel", type=int, default=1)
    args = parser.parse_args()

    tags = THEOREM_TAGS if args.theorem == "all" else (args.theorem,)
    print(f"{'check':<8} {'boards':>7} {'failures':>9} {'elapsed':>9}  property")
    failed = False
    for tag in tags:
        boards = default_sweep(tag, args.max_n)
        report = verify(boards, tag, parallel=args.parallel)
        print(f"{tag:<8} {report.boards_checked:>7} {len(report.failures):>9} "
              f"{report.elapsed:>8.2f}s  {DESCRIPTIONS[tag]}")
        for failure in report.failures:
            failed = True
            print(f"  FAIL on board {failure.board}: {failure.witness}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
