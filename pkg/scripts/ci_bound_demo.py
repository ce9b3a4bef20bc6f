"""Bound for a complete intersection of c hypersurfaces in an n-dimensional
abelian variety, from a synthetic intersection table.

The table is built from a single class: theta^n has degree n! * t and each
h_j is a_j * theta, which is what one gets when every H_j is a multiple of
the principal polarization scaled by t.
"""

import argparse
import itertools
import json
import math

from arithjet.bound import complete_intersection_bound
from arithjet.chow import THETA, AmbientSpec, IntersectionTable


def proportional_table(n, multiples, t=1):
    hyps = [f"h{j + 1}" for j in range(len(multiples))]
    symbols = (THETA, *hyps)
    weight = dict(zip(symbols, (1, *multiples)))
    numbers = {}
    for combo in itertools.combinations_with_replacement(symbols, n):
        numbers["*".join(combo)] = math.factorial(n) * t * math.prod(weight[s] for s in combo)
    ambient = AmbientSpec(n, symbols)
    return ambient, hyps, IntersectionTable.from_json(
        {"n": n, "symbols": list(symbols), "numbers": numbers}
    )


def main(argv=None):
    ap = argparse.ArgumentParser(description="complete-intersection bound demo")
    ap.add_argument("--p", type=int, default=5)
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--multiples", default="5,7", help="a_j with h_j = a_j theta")
    ap.add_argument("--t", type=int, default=1)
    args = ap.parse_args(argv)

    multiples = [int(a) for a in args.multiples.split(",")]
    ambient, hyps, table = proportional_table(args.n, multiples, args.t)
    report = complete_intersection_bound(args.p, ambient, hyps, table)
    print(json.dumps(report.to_json(), indent=2))


if __name__ == "__main__":
    main()
