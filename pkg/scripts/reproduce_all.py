#!/usr/bin/env python3
"""Rerun the standard verification battery and collect JSON reports.

Covers the classification tables at n = 3..5 (including tangent-space
verdicts), the membership relations and inclusion chains, and a per-partition
ideal report for every partition of n <= 5.  Exits nonzero if anything fails.
"""

import argparse
import pathlib
import sys

from symideal.cli import run
from symideal.combinat import partitions_of


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="reports", help="report directory")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--max-n", type=int, default=5, choices=(3, 4, 5))
    args = parser.parse_args()

    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    failures = []

    def invoke(argv, name):
        code = run(argv + ["--format", "json", "--seed", str(args.seed),
                           "--out", str(out / name)])
        print(f"{name}: {'ok' if code == 0 else 'FAILED'}")
        if code != 0:
            failures.append(name)

    for n in range(3, args.max_n + 1):
        invoke(["table1", "--n", str(n), "--jobs", str(args.jobs)], f"table1_n{n}.json")
        invoke(["lemmas", "--n", str(n)], f"lemmas_n{n}.json")
    for n in range(2, args.max_n + 1):
        for lam in partitions_of(n):
            tag = "-".join(str(p) for p in lam.parts)
            invoke(["tanisaki", "--n", str(n), "--lambda",
                    ",".join(str(p) for p in lam.parts)], f"tanisaki_n{n}_{tag}.json")

    if failures:
        print("failures:", ", ".join(failures))
        return 1
    print(f"all reports written to {out}/")
    return 0


if __name__ == "__main__":
    sys.exit(main())
