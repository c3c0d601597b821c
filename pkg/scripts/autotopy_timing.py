"""Time the pruned autotopy search against plain enumeration."""

import argparse
import random
import time

from anuclear.autotopy import autotopy_group, plain_autotopy_group
from anuclear.catalog import random_latin_square


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--orders", type=int, nargs="+", default=[3, 4, 5, 6, 7, 8])
    ap.add_argument("--reps", type=int, default=5)
    ap.add_argument("--plain-max", type=int, default=5, help="largest order for plain enumeration")
    ap.add_argument("--seed", type=int, default=2)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    for n in args.orders:
        squares = [random_latin_square(n, rng) for _ in range(args.reps)]
        t0 = time.perf_counter()
        orders = [autotopy_group(q).order for q in squares]
        pruned = (time.perf_counter() - t0) / args.reps
        line = f"n={n}: pruned {pruned * 1000:.1f} ms/square, orders {orders}"
        if n <= args.plain_max:
            t0 = time.perf_counter()
            same = all(plain_autotopy_group(q).elements == autotopy_group(q).elements for q in squares)
            plain = (time.perf_counter() - t0) / args.reps
            line += f", plain {plain * 1000:.1f} ms/square, agree={same}"
        print(line)


if __name__ == "__main__":
    main()
