"""
Claim Protocol

Defines the interface for verifiable claims following the Strategy Pattern.
Each claim checks one property of the resolution quiver (or of the
homological data) of a single admissible sequence.
"""

from dataclasses import dataclass
from enum import Enum, auto
from typing import Any, Optional, Protocol

from algebra import AdmissibleSequence


class Outcome(Enum):
    """Result of checking one claim on one sequence."""
    PASS = auto()
    FAIL = auto()
    NOT_APPLICABLE = auto()


@dataclass(frozen=True)
class ClaimResult:
    """
    Outcome of a claim on one sequence.

    Attributes:
        outcome: PASS, FAIL or NOT_APPLICABLE.
        expected: The value the claim predicts (on failure).
        actual: The value that was computed (on failure).
        detail: Short human-readable explanation.
    """
    outcome: Outcome
    expected: Any = None
    actual: Any = None
    detail: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.outcome is Outcome.PASS

    @classmethod
    def ok(cls) -> 'ClaimResult':
        return cls(Outcome.PASS)

    @classmethod
    def skip(cls, detail: Optional[str] = None) -> 'ClaimResult':
        return cls(Outcome.NOT_APPLICABLE, detail=detail)

    @classmethod
    def fail(cls, expected: Any, actual: Any, detail: str) -> 'ClaimResult':
        return cls(Outcome.FAIL, expected=expected, actual=actual, detail=detail)

    @classmethod
    def compare(cls, expected: Any, actual: Any, detail: str) -> 'ClaimResult':
        """PASS when expected == actual, otherwise FAIL carrying both values."""
        if expected == actual:
            return cls.ok()
        return cls.fail(expected, actual, detail)


class Claim(Protocol):
    """Protocol for verifiable claims following Strategy Pattern."""

    @property
    def name(self) -> str:
        """Stable identifier used in reports."""
        ...

    @property
    def description(self) -> str:
        """One-line statement of the claim."""
        ...

    def check(self, sequence: AdmissibleSequence) -> ClaimResult:
        """
        Check the claim on one sequence.

        Args:
            sequence: A validated admissible sequence.

        Returns:
            The outcome; NOT_APPLICABLE when the claim's hypotheses fail.
        """
        ...
