"""Run the closed-form sweep for d = a^2 + 2a at a chosen scale.

    python scripts/reproduce_theorems.py --a 1..200 --n 20 --jobs 4
"""

import argparse
import sys
import time

from pell_lucas.cli import cmd_verify_theorems, parse_range


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--a", type=parse_range, default=parse_range("1..100"))
    parser.add_argument("--n", type=int, default=20)
    parser.add_argument("--y-max", type=int, default=10_000)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    t0 = time.perf_counter()
    code, _, lines = cmd_verify_theorems(args.a, args.n, args.y_max, args.jobs)
    print("\n".join(lines))
    print(f"elapsed {time.perf_counter() - t0:.1f}s")
    return code


if __name__ == "__main__":
    sys.exit(main())
