"""Exception hierarchy shared by every module."""


class QuasigroupError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class DegreeMismatch(QuasigroupError):
    def __init__(self, left: int, right: int):
        super().__init__(f"degree mismatch: {left} vs {right}")
        self.left = left
        self.right = right


class CapExceeded(QuasigroupError):
    def __init__(self, cap: int):
        super().__init__(f"group closure exceeded cap {cap}")
        self.cap = cap


class RowNotPermutation(QuasigroupError):
    def __init__(self, index: int):
        super().__init__(f"row {index} is not a permutation")
        self.index = index


class ColumnNotPermutation(QuasigroupError):
    def __init__(self, index: int):
        super().__init__(f"column {index} is not a permutation")
        self.index = index


class SizeMismatch(QuasigroupError):
    pass


class SearchBoundExceeded(QuasigroupError):
    def __init__(self, n: int, bound: int):
        super().__init__(f"order {n} exceeds search bound {bound}")
        self.n = n
        self.bound = bound


class NotExtendable(QuasigroupError):
    pass


class UnsupportedShape(QuasigroupError):
    pass


class EpsilonPosition(QuasigroupError):
    pass


class NotALoop(QuasigroupError):
    pass


class ParseError(QuasigroupError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class WitnessInvalid(QuasigroupError):
    pass
