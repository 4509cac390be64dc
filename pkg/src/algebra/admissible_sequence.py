"""
Admissible Sequence Module.

A connected Nakayama algebra is carried around as its admissible sequence
(Kupisch series) c = (c_1, ..., c_n), where c_i is the length of the
indecomposable projective P_i and rad P_i is a factor module of P_{i+1}.
Vertices are 1-based throughout.
"""

import re
from dataclasses import dataclass
from enum import Enum, auto
from typing import Iterable, Tuple

from .errors import (
    EmptySequence,
    LineEntryTooSmall,
    MixedKind,
    NonIntegerEntry,
    NonPositiveEntry,
    NotCycleAlgebra,
    SequenceParseError,
    ViolatesFactorCondition,
)


_SEQUENCE_PATTERN = re.compile(r"\s*-?\d+(\s*,\s*-?\d+)*\s*")


class AlgebraKind(Enum):
    """Shape of the valued quiver of the algebra."""
    LINE = auto()
    CYCLE = auto()


def wrap(x: int, n: int) -> int:
    """
    Reduce an integer to a vertex in {1, ..., n}.

    Args:
        x: Any integer.
        n: Number of vertices.

    Returns:
        ((x - 1) mod n) + 1.
    """
    return (x - 1) % n + 1


@dataclass(frozen=True)
class AdmissibleSequence:
    """
    A validated admissible sequence together with its classification.

    Build instances through validate(); the constructor does not check
    admissibility.

    Attributes:
        c: The entries (c_1, ..., c_n).
        kind: LINE when c_n = 1, CYCLE otherwise.
        self_injective: True for constant cycle sequences and for (1).
    """
    c: Tuple[int, ...]
    kind: AlgebraKind
    self_injective: bool

    @property
    def n(self) -> int:
        """Number of simple modules."""
        return len(self.c)

    @property
    def is_cycle(self) -> bool:
        """Whether the algebra has no simple projective modules."""
        return self.kind is AlgebraKind.CYCLE

    @property
    def p(self) -> int:
        """Minimum entry p(A)."""
        return p_min(self)

    def entry(self, i: int) -> int:
        """Return c_i for a 1-based vertex i (wrapped for cycle algebras)."""
        if self.is_cycle:
            return self.c[wrap(i, self.n) - 1]
        if not 1 <= i <= self.n:
            raise IndexError(f"vertex {i} out of range 1..{self.n} for a line algebra")
        return self.c[i - 1]

    def vertex(self, x: int) -> int:
        """Interpret an integer as a vertex: wrapped for cycles, range-checked for lines."""
        if self.is_cycle:
            return wrap(x, self.n)
        if not 1 <= x <= self.n:
            raise IndexError(f"vertex {x} out of range 1..{self.n} for a line algebra")
        return x

    def __str__(self) -> str:
        return render(self)


def _as_integer(index: int, value: object) -> int:
    if isinstance(value, bool):
        raise NonIntegerEntry(index, value)
    try:
        number = int(value)
    except (TypeError, ValueError):
        raise NonIntegerEntry(index, value)
    if number != value:
        raise NonIntegerEntry(index, value)
    return number


def validate(raw: Iterable[int]) -> AdmissibleSequence:
    """
    Check admissibility of a raw sequence and classify it.

    Entries are taken in the given order; no rotation is applied.

    Args:
        raw: The candidate entries c_1, ..., c_n.

    Returns:
        The classified AdmissibleSequence.

    Raises:
        NonIntegerEntry: If some entry is not an integer (2.7 is rejected, not truncated).
        EmptySequence: If raw has no entries.
        NonPositiveEntry: If some entry is < 1.
        ViolatesFactorCondition: At the first i with c_{i+1} < c_i - 1
            (i = n for the cyclic closure c_1 >= c_n - 1).
        LineEntryTooSmall: If c_n = 1 and c_i = 1 for some i < n.
        MixedKind: If c_n > 1 and c_i = 1 for some i < n.
    """
    c = tuple(_as_integer(i, value) for i, value in enumerate(raw, start=1))
    if not c:
        raise EmptySequence()

    for i, value in enumerate(c, start=1):
        if value < 1:
            raise NonPositiveEntry(i, value)

    n = len(c)
    for i in range(1, n):
        if c[i] < c[i - 1] - 1:
            raise ViolatesFactorCondition(i, c[i - 1], c[i])

    if c[-1] == 1:
        for i in range(1, n):
            if c[i - 1] == 1:
                raise LineEntryTooSmall(i)
        return AdmissibleSequence(c=c, kind=AlgebraKind.LINE, self_injective=(n == 1))

    for i in range(1, n):
        if c[i - 1] == 1:
            raise MixedKind(i)
    if c[0] < c[-1] - 1:
        raise ViolatesFactorCondition(n, c[-1], c[0])

    return AdmissibleSequence(
        c=c,
        kind=AlgebraKind.CYCLE,
        self_injective=len(set(c)) == 1,
    )


def parse_sequence(text: str) -> AdmissibleSequence:
    """
    Parse and validate the text form "c_1,c_2,...,c_n".

    Args:
        text: Comma-separated decimal integers, surrounding whitespace allowed.

    Returns:
        The validated sequence.

    Raises:
        SequenceParseError: If the text does not match the grammar.
        AdmissibilityError: If the parsed entries are not admissible.
    """
    if text is None or not _SEQUENCE_PATTERN.fullmatch(text):
        raise SequenceParseError(
            f"cannot parse {text!r}: expected comma-separated integers such as '3,3,3,4'"
        )
    return validate(int(part) for part in text.split(","))


def render(sequence: AdmissibleSequence) -> str:
    """Text form of a sequence, accepted back by parse_sequence()."""
    return ",".join(str(value) for value in sequence.c)


def p_min(sequence: AdmissibleSequence) -> int:
    """Return p(A) = min(c_1, ..., c_n)."""
    return min(sequence.c)


def is_normalized(sequence: AdmissibleSequence) -> bool:
    """
    Whether a cycle sequence satisfies p(A) = c_1 = c_n - 1.

    Self-injective and line sequences are never normalized.
    """
    if not sequence.is_cycle or sequence.self_injective:
        return False
    p = p_min(sequence)
    return sequence.c[0] == p and sequence.c[-1] == p + 1


def _require_cycle(sequence: AdmissibleSequence, operation: str) -> None:
    if not sequence.is_cycle:
        raise NotCycleAlgebra(
            f"{operation} needs a cycle algebra, got line sequence ({render(sequence)})"
        )


def rotate(sequence: AdmissibleSequence, r: int) -> AdmissibleSequence:
    """
    Cyclically rotate a cycle sequence: c'_i = c_{wrap(i + r)}.

    Args:
        sequence: A cycle sequence.
        r: Rotation amount; taken modulo n.

    Returns:
        The rotated sequence, again a valid cycle sequence.

    Raises:
        NotCycleAlgebra: If the sequence is a line sequence.
    """
    _require_cycle(sequence, "rotate")
    shift = r % sequence.n
    rotated = sequence.c[shift:] + sequence.c[:shift]
    return validate(rotated)


def lift(sequence: AdmissibleSequence, t: int) -> AdmissibleSequence:
    """
    Add t*n to every entry of a cycle sequence.

    The resolution quiver is unchanged and every cycle gains t times its
    size in weight.

    Raises:
        NotCycleAlgebra: If the sequence is a line sequence.
        ValueError: If t is negative.
    """
    _require_cycle(sequence, "lift")
    if t < 0:
        raise ValueError(f"lift multiple must be nonnegative, got {t}")
    shift = t * sequence.n
    return validate(value + shift for value in sequence.c)

