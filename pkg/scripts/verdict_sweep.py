"""Compare A-nuclear / A-central verdicts with group-isotope oracles on random squares."""

import argparse
import random
from collections import Counter

from anuclear.autotopy import autotopy_group
from anuclear.catalog import random_latin_square
from anuclear.centers import is_a_central, is_a_nuclear, is_abelian_group_isotope, is_group_isotope


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--orders", type=int, nargs="+", default=[3, 4, 5, 6])
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    tally = Counter()
    for _ in range(args.count):
        n = rng.choice(args.orders)
        q = random_latin_square(n, rng)
        avt = autotopy_group(q)
        nuc, cen = is_a_nuclear(q, avt), is_a_central(q, avt)
        tally[n, "group isotope"] += nuc
        tally[n, "abelian group isotope"] += cen
        tally[n, "disagreement"] += (nuc != is_group_isotope(q)) + (cen != is_abelian_group_isotope(q))
        tally[n, "total"] += 1
    for n in sorted(args.orders):
        row = {k: tally[n, k] for k in ("total", "group isotope", "abelian group isotope", "disagreement")}
        print(f"n={n}: {row}")


if __name__ == "__main__":
    main()
