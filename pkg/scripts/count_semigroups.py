"""Count semigroups by genus with the tree and, for small genus, with the gap-set oracle."""

import argparse
import sys
import time
from pathlib import Path

from weierstrass import tree

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))
from conftest import brute_force_gapsets  # noqa: E402


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-genus", type=int, default=20)
    p.add_argument("--oracle-genus", type=int, default=9)
    p.add_argument("--jobs", type=int, default=1)
    args = p.parse_args()

    t = time.perf_counter()
    stats = tree.enumerate_parallel(tree.EnumerationFilter(args.max_genus), jobs=args.jobs)
    print(f"tree ({time.perf_counter() - t:.2f}s):", stats.counts_by_genus)

    t = time.perf_counter()
    oracle = [len(x) for x in brute_force_gapsets(args.oracle_genus)]
    print(f"oracle ({time.perf_counter() - t:.2f}s):", oracle)
    agree = stats.counts_by_genus[: args.oracle_genus + 1] == oracle
    print("agree" if agree else "DISAGREE")
    return 0 if agree else 1


if __name__ == "__main__":
    raise SystemExit(main())
