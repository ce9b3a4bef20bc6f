"""Term counts and wall time of iterated p-derivations.

Shows how fast delta^r(f) grows; useful for choosing --term-limit.
"""

import argparse
import time

from arithjet.delta import DeltaContext, delta
from arithjet.errors import ResourceLimit
from arithjet.parsing import parse_polynomial
from arithjet.polyring import term_limit


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--expr", default="y - x^2")
    ap.add_argument("--primes", default="3,5,7")
    ap.add_argument("--max-iter", type=int, default=3)
    ap.add_argument("--term-limit", type=int, default=10**6)
    args = ap.parse_args(argv)

    f0 = parse_polynomial(args.expr)
    print(f"{'p':>3} {'r':>2} {'terms':>9} {'degree':>7} {'seconds':>9}")
    for p in (int(x) for x in args.primes.split(",")):
        ctx = DeltaContext(p)
        f = f0
        with term_limit(args.term_limit):
            for r in range(1, args.max_iter + 1):
                t0 = time.perf_counter()
                try:
                    f = delta(f, ctx)
                except ResourceLimit as exc:
                    print(f"{p:>3} {r:>2}  stopped: {exc}")
                    break
                dt = time.perf_counter() - t0
                print(f"{p:>3} {r:>2} {len(f.terms()):>9} {f.degree:>7} {dt:>9.3f}")


if __name__ == "__main__":
    main()
