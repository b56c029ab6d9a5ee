"""Recompute the induced-from-little counts for so_n and sp_2n and diff them against the published table.

usage: python3 scripts/reproduce_count_tables.py [--so-max 51] [--sp-max 24]
"""

import argparse
import csv
import time
from pathlib import Path

from nilorbits.cli import little_induced_rows

TABLE = Path(__file__).resolve().parent.parent / "tests" / "data" / "count_tables.csv"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--so-max", type=int, default=51)
    ap.add_argument("--sp-max", type=int, default=24)
    args = ap.parse_args()

    with open(TABLE) as fh:
        published = {(r["family"], int(r["n"])): (int(r["induced_from_little"]), int(r["total"]))
                     for r in csv.DictReader(fh)}
    diffs = 0
    for family, top in (("so", args.so_max), ("sp", args.sp_max)):
        t = time.perf_counter()
        for n, count, total in little_induced_rows(family, top):
            ref = published.get((family, n))
            mark = "" if ref is None or ref == (count, total) else f"  <-- published {ref[0]}/{ref[1]}"
            diffs += bool(mark)
            print(f"{family} {n:3d} {count:7d} {total:7d}{mark}")
        print(f"# {family}: {time.perf_counter() - t:.1f}s")
    print(f"# rows differing from the published table: {diffs}")


if __name__ == "__main__":
    main()
