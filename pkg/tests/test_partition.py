import pytest

from anuclear.errors import SizeMismatch
from anuclear.partition import Partition


def test_parse_and_print():
    p = Partition.parse("2 4 | 0 1 | 3 5")
    assert p.blocks == ((0, 1), (2, 4), (3, 5))
    assert str(Partition.parse(str(p))) == str(p)
    assert p.related(2, 4) and not p.related(0, 2)
    assert p.block_of(5) == (3, 5)


def test_constructors():
    assert Partition.singletons(3).blocks == ((0,), (1,), (2,))
    assert Partition.whole(3).blocks == ((0, 1, 2),)
    with pytest.raises(SizeMismatch):
        Partition.of(3, [[0, 1]])
    with pytest.raises(SizeMismatch):
        Partition.of(2, [[0, 1], [1]])
