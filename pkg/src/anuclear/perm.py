"""Permutations of {0..n-1} and explicitly enumerated permutation groups.

Composition is left record: ``(p * q)(x) == p(q(x))``.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import CapExceeded, DegreeMismatch


class Perm:
    __slots__ = ("images", "_hash")

    def __init__(self, images: Sequence[int]):
        images = tuple(int(v) for v in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _trusted(cls, images: tuple) -> "Perm":
        p = object.__new__(cls)
        p.images = images
        p._hash = hash(images)
        return p

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls._trusted(tuple(range(n)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Perm":
        images = list(range(n))
        seen = set()
        for cyc in cycles:
            for i, x in enumerate(cyc):
                if x in seen or not 0 <= x < n:
                    raise ValueError(f"bad cycle element {x}")
                seen.add(x)
                images[x] = cyc[(i + 1) % len(cyc)]
        return cls(images)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "Perm":
        """Accept cycle notation ``(0 1)(2 4)`` or an image list ``1,0,4,5,2,3``."""
        text = text.strip()
        if text in ("", "e", "id", "ε", "()"):
            if n is None:
                raise ValueError("identity needs an explicit degree")
            return cls.identity(n)
        if text.startswith("("):
            cycles = [
                [int(t) for t in re.split(r"[\s,]+", body.strip()) if t]
                for body in re.findall(r"\(([^)]*)\)", text)
            ]
            if re.sub(r"\([^)]*\)", "", text).strip():
                raise ValueError(f"cannot parse cycles: {text!r}")
            if n is None:
                n = 1 + max((x for c in cycles for x in c), default=-1)
            return cls.from_cycles(cycles, n)
        p = cls(int(t) for t in re.split(r"[\s,]+", text) if t)
        if n is not None and p.degree != n:
            raise DegreeMismatch(p.degree, n)
        return p

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Perm") -> "Perm":
        return compose(self, other)

    def __invert__(self) -> "Perm":
        return inverse(self)

    def __pow__(self, k: int) -> "Perm":
        base = self if k >= 0 else inverse(self)
        result = Perm.identity(self.degree)
        for _ in range(abs(k) % max(1, self.order())):
            result = compose(base, result)
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __lt__(self, other: "Perm") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash

    def __len__(self) -> int:
        return len(self.images)

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))

    def fixed_points(self) -> list[int]:
        return [i for i, v in enumerate(self.images) if i == v]

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = []
            x = start
            while not seen[x]:
                seen[x] = True
                cyc.append(x)
                x = self.images[x]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if self.degree else 1

    def cycle_string(self) -> str:
        parts = ["(" + " ".join(map(str, c)) + ")" for c in self.cycles() if len(c) > 1]
        return "".join(parts) or "()"

    def __str__(self) -> str:
        return ",".join(map(str, self.images))

    def __repr__(self) -> str:
        return f"Perm({list(self.images)})"


def compose(p: Perm, q: Perm) -> Perm:
    """Left record: compose(p, q)(x) = p(q(x))."""
    if p.degree != q.degree:
        raise DegreeMismatch(p.degree, q.degree)
    pi = p.images
    return Perm._trusted(tuple(pi[v] for v in q.images))


def inverse(p: Perm) -> Perm:
    out = [0] * p.degree
    for i, v in enumerate(p.images):
        out[v] = i
    return Perm._trusted(tuple(out))


def conjugate(p: Perm, by: Perm) -> Perm:
    """Return by^-1 * p * by."""
    return compose(inverse(by), compose(p, by))


@dataclass(frozen=True)
class PermGroup:
    degree: int
    elements: frozenset

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Perm]:
        return iter(sorted(self.elements))

    def __contains__(self, p) -> bool:
        return p in self.elements

    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    def is_abelian(self) -> bool:
        els = list(self.elements)
        return all(compose(a, b) == compose(b, a) for i, a in enumerate(els) for b in els[i + 1:])

    def is_group(self) -> bool:
        """Check the group axioms directly on the stored element set."""
        els = self.elements
        if self.identity() not in els:
            return False
        if any(p.degree != self.degree for p in els):
            return False
        if any(inverse(p) not in els for p in els):
            return False
        return all(compose(a, b) in els for a in els for b in els)

    def conjugate(self, by: Perm) -> "PermGroup":
        return PermGroup(self.degree, frozenset(conjugate(p, by) for p in self.elements))

    def __str__(self) -> str:
        return "{" + ", ".join(p.cycle_string() for p in self) + "}"


def trivial_group(n: int) -> PermGroup:
    return PermGroup(n, frozenset([Perm.identity(n)]))


def generate_group(gens: Iterable[Perm], cap: int | None = None, degree: int | None = None) -> PermGroup:
    """Breadth-first closure of ``gens`` under composition and inversion.

    ``cap`` defaults to degree!. Raises CapExceeded when the closure outgrows it.
    """
    gens = list(gens)
    if degree is None:
        if not gens:
            raise ValueError("empty generator set needs an explicit degree")
        degree = gens[0].degree
    for g in gens:
        if g.degree != degree:
            raise DegreeMismatch(g.degree, degree)
    if cap is None:
        cap = math.factorial(degree)
    if cap < 1:
        raise ValueError("cap must be at least 1")
    # inverses of generators are powers of them in a finite group, but adding them
    # keeps the frontier short
    step = list(dict.fromkeys(gens + [inverse(g) for g in gens]))
    ident = Perm.identity(degree)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in step:
                r = compose(g, p)
                if r not in seen:
                    seen.add(r)
                    if len(seen) > cap:
                        raise CapExceeded(cap)
                    nxt.append(r)
        frontier = nxt
    return PermGroup(degree, frozenset(seen))


class GroupFingerprint(NamedTuple):
    """Isomorphism invariant: order, commutativity, element-order multiset.

    This separates all groups of order below 16. At order 16 it starts to
    fail: Z4xZ4 and Z4:Z4 have the same element orders and only the abelian
    flag splits them, and collisions between nonabelian groups of order 16
    are not ruled out.
    """

    order: int
    abelian: bool
    element_orders: tuple  # sorted (element order, count) pairs

    def order_counts(self) -> dict[int, int]:
        return dict(self.element_orders)


def group_fingerprint(g: PermGroup) -> GroupFingerprint:
    counts = Counter(p.order() for p in g.elements)
    return GroupFingerprint(g.order, g.is_abelian(), tuple(sorted(counts.items())))


def is_alternating_a4(fp: GroupFingerprint) -> bool:
    # the nonabelian groups of order 12 are A4, D6 and Dic3; only A4 lacks order-6 elements
    return fp.order == 12 and not fp.abelian and 6 not in fp.order_counts()


def orbit_blocks(perms: Iterable[Perm], degree: int) -> list[list[int]]:
    """Orbits of the group generated by ``perms``, each sorted, in order of least element."""
    parent = list(range(degree))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in perms:
        for x, y in enumerate(p.images):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
    blocks: dict[int, list[int]] = {}
    for x in range(degree):
        blocks.setdefault(find(x), []).append(x)
    return sorted(blocks.values())
