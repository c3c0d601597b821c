from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import SizeMismatch


@dataclass(frozen=True)
class Partition:
    """Equivalence on {0..n-1}; blocks are sorted tuples in order of least element."""

    n: int
    blocks: tuple

    def __post_init__(self):
        seen = sorted(x for b in self.blocks for x in b)
        if seen != list(range(self.n)) or any(len(b) == 0 for b in self.blocks):
            raise SizeMismatch(f"blocks do not partition 0..{self.n - 1}")

    @classmethod
    def of(cls, n: int, blocks: Iterable[Iterable[int]]) -> "Partition":
        bl = sorted(tuple(sorted(b)) for b in blocks)
        return cls(n, tuple(bl))

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "Partition":
        """Parse ``"0 1 | 2 4 | 3 5"``."""
        blocks = [[int(t) for t in part.replace(",", " ").split()] for part in text.split("|")]
        blocks = [b for b in blocks if b]
        if n is None:
            n = sum(len(b) for b in blocks)
        return cls.of(n, blocks)

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        return cls.of(n, [[x] for x in range(n)])

    @classmethod
    def whole(cls, n: int) -> "Partition":
        return cls.of(n, [range(n)] if n else [])

    def labels(self) -> tuple:
        lab = [0] * self.n
        for i, b in enumerate(self.blocks):
            for x in b:
                lab[x] = i
        return tuple(lab)

    def related(self, x: int, y: int) -> bool:
        lab = self.labels()
        return lab[x] == lab[y]

    def block_of(self, x: int) -> tuple:
        for b in self.blocks:
            if x in b:
                return b
        raise KeyError(x)

    def pairs(self) -> frozenset:
        return frozenset((x, y) for b in self.blocks for x in b for y in b)

    def as_sets(self) -> set:
        return {frozenset(b) for b in self.blocks}

    def __str__(self) -> str:
        return " | ".join(" ".join(map(str, b)) for b in self.blocks)
