"""Count how often each reciprocal-normality implication fails.

Isotopes of the order-6 loop are the interesting population; random squares
and group isotopes are included for contrast.
"""

import argparse
import random
from collections import Counter

from anuclear.catalog import cyclic, klein, order6_loop, random_latin_square
from anuclear.congruence import PROVEN_PAIRINGS, normality_report
from anuclear.isotopy import Isotopy, apply_isotopy
from anuclear.perm import Perm


def rand_isotopy(n, rng):
    def p():
        xs = list(range(n))
        rng.shuffle(xs)
        return Perm(xs)

    return Isotopy(p(), p(), p())


def census(label, quasigroups):
    fails = Counter()
    total = 0
    for q in quasigroups:
        total += 1
        for key, ok in normality_report(q).implications.items():
            fails[key] += not ok
    print(f"{label} ({total} instances)")
    for key in sorted(fails):
        tag = "proven" if key in PROVEN_PAIRINGS else "      "
        print(f"  {tag} {key}: {fails[key]} failures")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=50)
    ap.add_argument("--seed", type=int, default=3)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    loop = order6_loop()
    census("order-6 loop isotopes", [apply_isotopy(loop, rand_isotopy(6, rng)) for _ in range(args.count)])
    census("random squares n=5,6", [random_latin_square(rng.choice([5, 6]), rng) for _ in range(args.count)])
    groups = [cyclic(4), klein(), cyclic(5), cyclic(6)]
    census(
        "group isotopes",
        [apply_isotopy(g, rand_isotopy(g.n, rng)) for g in (rng.choice(groups) for _ in range(args.count))],
    )


if __name__ == "__main__":
    main()
