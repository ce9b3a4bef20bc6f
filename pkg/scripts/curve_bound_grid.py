"""Tabulate the genus-g curve bound over a grid of (g, p) with p > 2g.

    python scripts/curve_bound_grid.py --max-genus 6 --max-prime 31
"""

import argparse
import csv
import sys

from arithjet.bound import buium_curve_bound
from arithjet.delta import is_prime


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-genus", type=int, default=10)
    ap.add_argument("--max-prime", type=int, default=97)
    args = ap.parse_args(argv)

    out = csv.writer(sys.stdout)
    out.writerow(["g", "p", "interior", "bound_digits", "bound"])
    for g in range(2, args.max_genus + 1):
        for p in range(2 * g + 1, args.max_prime + 1):
            if p % 2 and is_prime(p):
                r = buium_curve_bound(p, g)
                out.writerow([g, p, r.interior, len(str(r.bound)), r.bound])


if __name__ == "__main__":
    main()
