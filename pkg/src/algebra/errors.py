"""
Errors raised while parsing and validating admissible sequences.
"""


class AdmissibilityError(ValueError):
    """Base class for sequences that are not admissible."""
    pass


class EmptySequence(AdmissibilityError):
    """Raised when the sequence has no entries."""

    def __init__(self) -> None:
        super().__init__("admissible sequence cannot be empty")


class NonIntegerEntry(AdmissibilityError):
    """Raised when some entry is not an integer (floats are never truncated)."""

    def __init__(self, index: int, value: object) -> None:
        self.index = index
        self.value = value
        super().__init__(f"entry c_{index} = {value!r} is not an integer")


class NonPositiveEntry(AdmissibilityError):
    """Raised when some entry is zero or negative."""

    def __init__(self, index: int, value: int) -> None:
        self.index = index
        self.value = value
        super().__init__(f"entry c_{index} = {value} is not a positive integer")


class ViolatesFactorCondition(AdmissibilityError):
    """Raised when c_{i+1} < c_i - 1, i.e. rad P_i is not a factor of P_{i+1}."""

    def __init__(self, index: int, current: int, following: int) -> None:
        self.index = index
        self.current = current
        self.following = following
        super().__init__(
            f"factor condition fails at i={index}: "
            f"next entry {following} < c_{index} - 1 = {current - 1}"
        )


class LineEntryTooSmall(AdmissibilityError):
    """Raised when a line sequence has an entry 1 before its last position."""

    def __init__(self, index: int) -> None:
        self.index = index
        super().__init__(
            f"line sequence has c_{index} = 1 before the end; "
            f"only the last entry may be 1"
        )


class MixedKind(AdmissibilityError):
    """Raised when a sequence not ending in 1 still contains an entry 1."""

    def __init__(self, index: int) -> None:
        self.index = index
        super().__init__(
            f"c_{index} = 1 but the last entry is not 1: "
            f"neither a line nor a cycle sequence"
        )


class NotCycleAlgebra(ValueError):
    """Raised when an operation that needs a cycle algebra receives a line algebra."""
    pass


class SequenceParseError(ValueError):
    """Raised when the text form of a sequence cannot be parsed."""
    pass
