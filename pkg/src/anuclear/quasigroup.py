"""Cayley-table quasigroups, translations, local identity maps, parastrophes."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import ColumnNotPermutation, DegreeMismatch, RowNotPermutation, SizeMismatch
from .perm import Perm, compose, inverse

LEFT, RIGHT, MIDDLE = "left", "right", "middle"
KINDS = (LEFT, RIGHT, MIDDLE)


class FiniteQuasigroup:
    """Latin square on {0..n-1}; ``table[x][y]`` is x*y."""

    def __init__(self, table: Sequence[Sequence[int]]):
        n = len(table)
        rows = tuple(tuple(int(v) for v in row) for row in table)
        full = set(range(n))
        for x, row in enumerate(rows):
            if len(row) != n or set(row) != full:
                raise RowNotPermutation(x)
        for y in range(n):
            if {rows[x][y] for x in range(n)} != full:
                raise ColumnNotPermutation(y)
        self.n = n
        self.table = rows

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteQuasigroup) and self.table == other.table

    def __hash__(self) -> int:
        return hash(self.table)

    def __repr__(self) -> str:
        return f"FiniteQuasigroup({[list(r) for r in self.table]})"

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    @property
    def elements(self) -> range:
        return range(self.n)

    @cached_property
    def _left(self) -> tuple:
        return tuple(Perm._trusted(row) for row in self.table)

    @cached_property
    def _right(self) -> tuple:
        return tuple(Perm._trusted(tuple(self.table[x][y] for x in range(self.n))) for y in range(self.n))

    @cached_property
    def _middle(self) -> tuple:
        out = [[0] * self.n for _ in range(self.n)]
        for x in range(self.n):
            for z, a in enumerate(self.table[x]):
                out[a][x] = z
        return tuple(Perm._trusted(tuple(r)) for r in out)

    def left(self, a: int) -> Perm:
        return self._left[a]

    def right(self, a: int) -> Perm:
        return self._right[a]

    def middle(self, a: int) -> Perm:
        """P_a: the permutation with x * P_a(x) = a."""
        return self._middle[a]

    def translations(self, kind: str) -> tuple:
        return {LEFT: self._left, RIGHT: self._right, MIDDLE: self._middle}[kind]

    @cached_property
    def ldiv(self) -> tuple:
        """ldiv[x][y] = x\\y, the z with x*z = y."""
        return tuple(inverse(L).images for L in self._left)

    @cached_property
    def rdiv(self) -> tuple:
        """rdiv[y][x] = y/x, the z with z*x = y."""
        inv = [inverse(R).images for R in self._right]
        return tuple(tuple(inv[x][y] for x in range(self.n)) for y in range(self.n))

    @cached_property
    def left_identity(self) -> int | None:
        for e in range(self.n):
            if self._left[e].is_identity():
                return e
        return None

    @cached_property
    def right_identity(self) -> int | None:
        for e in range(self.n):
            if self._right[e].is_identity():
                return e
        return None

    @property
    def identity(self) -> int | None:
        e = self.left_identity
        return e if e is not None and e == self.right_identity else None

    def is_loop(self) -> bool:
        return self.identity is not None

    def is_associative(self) -> bool:
        t = self.table
        r = range(self.n)
        return all(t[t[x][y]][z] == t[x][t[y][z]] for x in r for y in r for z in r)

    def is_commutative(self) -> bool:
        t = self.table
        return all(t[x][y] == t[y][x] for x in range(self.n) for y in range(x + 1, self.n))

    def transpose(self) -> "FiniteQuasigroup":
        return FiniteQuasigroup(list(zip(*self.table)))


def validate_table(n: int, grid: Sequence[Sequence[int]]) -> FiniteQuasigroup:
    if len(grid) != n:
        raise SizeMismatch(f"expected {n} rows, got {len(grid)}")
    for x, row in enumerate(grid):
        if len(row) != n or any(not 0 <= v < n for v in row):
            raise RowNotPermutation(x)
    return FiniteQuasigroup(grid)


def translation(q: FiniteQuasigroup, kind: str, a: int) -> Perm:
    if not 0 <= a < q.n:
        raise ValueError(f"element {a} out of range")
    return q.translations(kind)[a]


def divisions(q: FiniteQuasigroup) -> tuple:
    """Return (ldiv, rdiv) with ldiv[x][y] = x\\y and rdiv[y][x] = y/x."""
    return q.ldiv, q.rdiv


@dataclass(frozen=True)
class LocalMaps:
    """Local identity maps: f(x)*x = x, x*e(x) = x, s(x) = x*x."""

    e: tuple
    f: tuple
    s: tuple

    @property
    def left_loop(self) -> bool:
        return len(set(self.f)) == 1

    @property
    def right_loop(self) -> bool:
        return len(set(self.e)) == 1

    @property
    def loop(self) -> bool:
        return self.left_loop and self.right_loop and self.e[0] == self.f[0]

    @property
    def unipotent(self) -> bool:
        return len(set(self.s)) == 1

    @property
    def idempotent(self) -> bool:
        ident = tuple(range(len(self.s)))
        return self.e == self.f == self.s == ident

    def get(self, name: str) -> tuple:
        return {"e": self.e, "f": self.f, "s": self.s}[name]


def local_maps(q: FiniteQuasigroup) -> LocalMaps:
    r = range(q.n)
    e = tuple(q.ldiv[x][x] for x in r)
    f = tuple(q.rdiv[x][x] for x in r)
    s = tuple(q.table[x][x] for x in r)
    return LocalMaps(e, f, s)


class Parastrophy(enum.Enum):
    """Element sigma of S3 acting on the triple (x1, x2, x3) with x1*x2 = x3.

    The sigma-parastrophe holds (y1, y2, y3) exactly when
    (y1, y2, y3) = (x_sigma(1), x_sigma(2), x_sigma(3)) for a product triple x.
    So (12) is the transpose, (13) is z o y = x for x*y = z (right division),
    (23) is x o z = y (left division), (123) sends (x2, x3) to x1.
    """

    E = "e"
    S12 = "12"
    S13 = "13"
    S23 = "23"
    S123 = "123"
    S132 = "132"

    @property
    def perm(self) -> tuple:
        """Images of 0,1,2 (positions are zero-based)."""
        return _SIGMA_IMAGES[self]

    @classmethod
    def from_perm(cls, images: Sequence[int]) -> "Parastrophy":
        images = tuple(images)
        for s, im in _SIGMA_IMAGES.items():
            if im == images:
                return s
        raise ValueError(f"not an element of S3: {images}")

    @classmethod
    def parse(cls, text: str) -> "Parastrophy":
        t = text.strip().strip("()").replace(" ", "")
        if t in ("e", "ε", "id", "", "1"):
            return cls.E
        return cls(t)

    def __mul__(self, other: "Parastrophy") -> "Parastrophy":
        """Left record: (s * t)(i) = s(t(i))."""
        a, b = self.perm, other.perm
        return Parastrophy.from_perm(tuple(a[b[i]] for i in range(3)))

    def inverse(self) -> "Parastrophy":
        out = [0, 0, 0]
        for i, v in enumerate(self.perm):
            out[v] = i
        return Parastrophy.from_perm(out)

    def __str__(self) -> str:
        return "e" if self is Parastrophy.E else f"({self.value})"


_SIGMA_IMAGES = {
    Parastrophy.E: (0, 1, 2),
    Parastrophy.S12: (1, 0, 2),
    Parastrophy.S13: (2, 1, 0),
    Parastrophy.S23: (0, 2, 1),
    Parastrophy.S123: (1, 2, 0),
    Parastrophy.S132: (2, 0, 1),
}

SIGMAS = tuple(Parastrophy)


def parastrophe(q: FiniteQuasigroup, sigma: Parastrophy) -> FiniteQuasigroup:
    if sigma is Parastrophy.E:
        return q
    s = sigma.perm
    grid = [[0] * q.n for _ in range(q.n)]
    for x1 in range(q.n):
        for x2, x3 in enumerate(q.table[x1]):
            x = (x1, x2, x3)
            grid[x[s[0]]][x[s[1]]] = x[s[2]]
    return FiniteQuasigroup(grid)


# Translation K of the sigma-parastrophe, expressed through translations of q:
# TRANSLATION_TABLE[(K, inverted)][sigma] = (K', inverted'), all at the same element.
_T1_ROWS = {
    ("right", False): ("R", "L", "R-", "P", "P-", "L-"),
    ("left", False): ("L", "R", "P-", "L-", "R-", "P"),
    ("middle", False): ("P", "P-", "L-", "R", "L", "R-"),
    ("right", True): ("R-", "L-", "R", "P-", "P", "L"),
    ("left", True): ("L-", "R-", "P", "L", "R", "P-"),
    ("middle", True): ("P-", "P", "L", "R-", "L-", "R"),
}
_T1_COLS = (Parastrophy.E, Parastrophy.S12, Parastrophy.S13, Parastrophy.S23, Parastrophy.S123, Parastrophy.S132)
_LETTER = {"R": RIGHT, "L": LEFT, "P": MIDDLE}

TRANSLATION_TABLE = {
    row: {
        col: (_LETTER[cell[0]], cell.endswith("-"))
        for col, cell in zip(_T1_COLS, cells)
    }
    for row, cells in _T1_ROWS.items()
}

# Local map name of the sigma-parastrophe -> local map name of q.
LOCAL_MAP_TABLE = {
    "f": dict(zip(_T1_COLS, ("f", "e", "s", "f", "e", "s"))),
    "e": dict(zip(_T1_COLS, ("e", "f", "e", "s", "s", "f"))),
    "s": dict(zip(_T1_COLS, ("s", "s", "f", "e", "f", "e"))),
}


def predicted_translation(q: FiniteQuasigroup, sigma: Parastrophy, kind: str, a: int, inverted: bool = False) -> Perm:
    """Translation of parastrophe(q, sigma) read off the lookup table, without building it."""
    k2, inv2 = TRANSLATION_TABLE[(kind, inverted)][sigma]
    p = translation(q, k2, a)
    return inverse(p) if inv2 else p


def tau_property(perms: Sequence[Perm]) -> bool:
    """Every quotient p_i p_j^-1 (i != j) is fixed-point free."""
    perms = list(perms)
    m = len(perms)
    for p in perms:
        if p.degree != m:
            raise SizeMismatch(f"{m} permutations of degree {p.degree}")
    invs = [inverse(p) for p in perms]
    for i in range(m):
        for j in range(m):
            if i != j and compose(perms[i], invs[j]).fixed_points():
                return False
    return True


def is_simply_transitive(perms: Sequence[Perm]) -> bool:
    """Direct scan: each (x, y) is realised by exactly one permutation."""
    perms = list(perms)
    if not perms:
        return False
    n = perms[0].degree
    for x in range(n):
        targets = sorted(p(x) for p in perms)
        if targets != list(range(n)):
            return False
    return len(perms) == n


def check_degree(q: FiniteQuasigroup, *perms: Perm) -> None:
    for p in perms:
        if p.degree != q.n:
            raise DegreeMismatch(p.degree, q.n)
