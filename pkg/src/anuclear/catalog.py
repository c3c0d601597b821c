"""Named example tables and Latin-square generators."""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from .quasigroup import FiniteQuasigroup

# 0-based; middle nucleus {0, 1}
ORDER6_LOOP_ROWS = ("012345", "103254", "241530", "354021", "425103", "530412")
# printed 1-based; stored with every label shifted down by one
ORDER5_LOOP_ROWS = ("12345", "23154", "34512", "45231", "51423")


def order6_loop() -> FiniteQuasigroup:
    return FiniteQuasigroup([[int(c) for c in row] for row in ORDER6_LOOP_ROWS])


def order5_loop() -> FiniteQuasigroup:
    return FiniteQuasigroup([[int(c) - 1 for c in row] for row in ORDER5_LOOP_ROWS])


def cyclic(n: int) -> FiniteQuasigroup:
    return FiniteQuasigroup([[(x + y) % n for y in range(n)] for x in range(n)])


def elementary_abelian_2(k: int) -> FiniteQuasigroup:
    n = 1 << k
    return FiniteQuasigroup([[x ^ y for y in range(n)] for x in range(n)])


def klein() -> FiniteQuasigroup:
    return elementary_abelian_2(2)


def symmetric3() -> FiniteQuasigroup:
    """S3 with elements listed in lexicographic order of their image tuples; 0 is the identity."""
    perms = list(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    return FiniteQuasigroup([[index[tuple(a[b[i]] for i in range(3))] for b in perms] for a in perms])


def linear(p: int, a: int, b: int, c: int = 0) -> FiniteQuasigroup:
    """x o y = a x + b y + c mod p (a quasigroup when a, b are units)."""
    return FiniteQuasigroup([[(a * x + b * y + c) % p for y in range(p)] for x in range(p)])


def ts_order3() -> FiniteQuasigroup:
    """x o y = -x - y mod 3: commutative with x o (x o y) = y."""
    return linear(3, 2, 2)


def steiner7() -> FiniteQuasigroup:
    """Idempotent TS-quasigroup of the Fano plane."""
    lines = [(0, 1, 3), (1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 0), (5, 6, 1), (6, 0, 2)]
    t = [[x if x == y else -1 for y in range(7)] for x in range(7)]
    for a, b, c in lines:
        for x, y, z in itertools.permutations((a, b, c)):
            t[x][y] = z
    return FiniteQuasigroup(t)


def all_latin_squares(n: int) -> Iterator[FiniteQuasigroup]:
    """Every Latin square of order n, by row-major backtracking."""
    grid = [[-1] * n for _ in range(n)]
    rows = [set() for _ in range(n)]
    cols = [set() for _ in range(n)]

    def rec(k):
        if k == n * n:
            yield FiniteQuasigroup(grid)
            return
        i, j = divmod(k, n)
        for v in range(n):
            if v in rows[i] or v in cols[j]:
                continue
            grid[i][j] = v
            rows[i].add(v)
            cols[j].add(v)
            yield from rec(k + 1)
            rows[i].discard(v)
            cols[j].discard(v)
        grid[i][j] = -1

    yield from rec(0)


def random_latin_square(n: int, rng: random.Random) -> FiniteQuasigroup:
    """Random Latin square via randomized backtracking.

    Not uniform over all squares, but every square has positive probability,
    which is all the sweeps need. Restarts keep the rare deep dead ends cheap.
    """
    while True:
        grid = [[-1] * n for _ in range(n)]
        rows = [set() for _ in range(n)]
        cols = [set() for _ in range(n)]
        budget = [50 * n * n]

        def rec(k):
            if k == n * n:
                return True
            budget[0] -= 1
            if budget[0] < 0:
                return False
            i, j = divmod(k, n)
            cand = [v for v in range(n) if v not in rows[i] and v not in cols[j]]
            rng.shuffle(cand)
            for v in cand:
                grid[i][j] = v
                rows[i].add(v)
                cols[j].add(v)
                if rec(k + 1):
                    return True
                rows[i].discard(v)
                cols[j].discard(v)
            grid[i][j] = -1
            return False

        if rec(0):
            return FiniteQuasigroup(grid)


def random_loop(n: int, rng: random.Random) -> FiniteQuasigroup:
    """Random loop: a random square normalised by its LP-isotope at (0, 0)."""
    from .isotopy import LOOP, lp_isotope

    return lp_isotope(random_latin_square(n, rng), LOOP, 0, 0)


NAMED = {
    "order6_loop": order6_loop,
    "order5_loop": order5_loop,
    "klein": klein,
    "s3": symmetric3,
    "ts3": ts_order3,
    "steiner7": steiner7,
}
