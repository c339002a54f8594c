"""Tabulate fundamental solutions of x^2 - d*y^2 = N, N in {1, -1, 4, -4}.

Writes CSV to stdout; big integers are written in full.

    python scripts/fundamental_table.py --max-d 1000 > table.csv
"""

import argparse
import csv
import sys

from pell_lucas import cf_expand_sqrt, verdict
from pell_lucas.cf_engine import is_square
from pell_lucas.special_family import family_a


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--min-d", type=int, default=2)
    parser.add_argument("--max-d", type=int, default=200)
    args = parser.parse_args()

    writer = csv.writer(sys.stdout)
    writer.writerow(["d", "period", "family_a", "N", "status", "x", "y"])
    for d in range(max(args.min_d, 2), args.max_d + 1):
        if is_square(d):
            continue
        m = cf_expand_sqrt(d).m
        a = family_a(d)
        for N in (1, -1, 4, -4):
            v = verdict(d, N)
            x, y = v.fundamental if v.solvable else ("", "")
            writer.writerow([d, m, a or "", N, v.status.value, x, y])


if __name__ == "__main__":
    main()
