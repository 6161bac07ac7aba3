"""Exhaustive max effective weight search, written as JSON and CSV next to each other."""

import argparse
import logging
import time
from pathlib import Path

from weierstrass.reports import conjecture_max_ew


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-genus", type=int, default=30)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out-dir", type=Path, default=Path("results"))
    args = p.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(message)s")

    start = time.perf_counter()
    report = conjecture_max_ew(args.max_genus, jobs=args.jobs)
    elapsed = time.perf_counter() - start

    args.out_dir.mkdir(parents=True, exist_ok=True)
    stem = args.out_dir / f"max_ew_g{args.max_genus}"
    stem.with_suffix(".json").write_text(report.to_json())
    stem.with_suffix(".csv").write_text(report.to_csv())
    print(report.to_text(), end="")
    print(f"{sum(report.counts)} semigroups in {elapsed:.1f}s; wrote {stem}.json/.csv")
    return 0 if report.ok else 5


if __name__ == "__main__":
    raise SystemExit(main())
