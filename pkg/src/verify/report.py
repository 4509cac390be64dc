"""
Verification Report Module.

Per-claim tallies and counterexamples of a sweep. Reports from disjoint
batches merge in any order; the merged report is canonically sorted so
its serialization does not depend on execution order.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from .claim import ClaimResult, Outcome
from .config import SuiteConfig


@dataclass(frozen=True)
class Counterexample:
    """
    A reproducible failure of one claim.

    Attributes:
        claim: Name of the failing claim.
        sequence: Entries of the input sequence.
        expected: Value the claim predicts.
        actual: Value that was computed.
        detail: Explanation.
    """
    claim: str
    sequence: Tuple[int, ...]
    expected: Any
    actual: Any
    detail: str

    def sort_key(self) -> Tuple[int, Tuple[int, ...], str]:
        return (len(self.sequence), self.sequence, self.claim)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "claim": self.claim,
            "sequence": list(self.sequence),
            "expected": self.expected,
            "actual": self.actual,
            "detail": self.detail,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Counterexample':
        return cls(
            claim=data["claim"],
            sequence=tuple(data["sequence"]),
            expected=data.get("expected"),
            actual=data.get("actual"),
            detail=data.get("detail", ""),
        )


@dataclass
class ClaimTally:
    """Pass / fail / not-applicable counts for one claim."""
    passed: int = 0
    failed: int = 0
    not_applicable: int = 0

    def record(self, outcome: Outcome) -> None:
        if outcome is Outcome.PASS:
            self.passed += 1
        elif outcome is Outcome.FAIL:
            self.failed += 1
        else:
            self.not_applicable += 1

    def add(self, other: 'ClaimTally') -> None:
        self.passed += other.passed
        self.failed += other.failed
        self.not_applicable += other.not_applicable

    def to_dict(self) -> Dict[str, int]:
        return {
            "passed": self.passed,
            "failed": self.failed,
            "not_applicable": self.not_applicable,
        }


@dataclass
class VerificationReport:
    """
    Results of checking every registered claim over an enumeration.

    Attributes:
        config: Bounds used for the sweep.
        sequences_enumerated: Number of sequences checked.
        tallies: Per-claim counts, keyed by claim name.
        counterexamples: Failures, each with the input and both values.
    """
    config: SuiteConfig
    sequences_enumerated: int = 0
    tallies: Dict[str, ClaimTally] = field(default_factory=dict)
    counterexamples: List[Counterexample] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        """True when no claim failed."""
        return not self.counterexamples

    def record(self, claim: str, sequence: Tuple[int, ...], result: ClaimResult) -> None:
        """Count one outcome; a failure also stores a counterexample."""
        self.tallies.setdefault(claim, ClaimTally()).record(result.outcome)
        if result.outcome is Outcome.FAIL:
            self.counterexamples.append(Counterexample(
                claim=claim,
                sequence=tuple(sequence),
                expected=result.expected,
                actual=result.actual,
                detail=result.detail or "",
            ))

    def merge(self, other: 'VerificationReport') -> None:
        """Add the tallies and counterexamples of a disjoint batch."""
        self.sequences_enumerated += other.sequences_enumerated
        for claim, tally in other.tallies.items():
            self.tallies.setdefault(claim, ClaimTally()).add(tally)
        self.counterexamples.extend(other.counterexamples)
        self.counterexamples.sort(key=Counterexample.sort_key)

    def to_dict(self) -> Dict[str, Any]:
        """
        Serialize the report to a dictionary.

        Returns:
            Dictionary with bounds, counts, per-claim tallies and counterexamples.
        """
        return {
            "bounds": {"n_max": self.config.n_max, "c_max": self.config.c_max},
            "sequences_enumerated": self.sequences_enumerated,
            "ok": self.ok,
            "claims": {name: tally.to_dict() for name, tally in self.tallies.items()},
            "counterexamples": [
                example.to_dict()
                for example in sorted(self.counterexamples, key=Counterexample.sort_key)
            ],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'VerificationReport':
        """Deserialize a report written by to_dict()."""
        report = cls(
            config=SuiteConfig.from_dict(data["bounds"]),
            sequences_enumerated=data["sequences_enumerated"],
        )
        for name, counts in data["claims"].items():
            report.tallies[name] = ClaimTally(**counts)
        report.counterexamples = [
            Counterexample.from_dict(item) for item in data.get("counterexamples", [])
        ]
        return report

    def summary_table(self) -> str:
        """Human-readable table: one row per claim, then the verdict."""
        width = max([len(name) for name in self.tallies] + [len("claim")])
        lines = [
            f"bounds: n <= {self.config.n_max}, c_i <= {self.config.c_max}; "
            f"{self.sequences_enumerated} sequences",
            f"{'claim':<{width}}  {'pass':>8}  {'fail':>6}  {'n/a':>8}",
        ]
        for name, tally in self.tallies.items():
            lines.append(
                f"{name:<{width}}  {tally.passed:>8}  {tally.failed:>6}  {tally.not_applicable:>8}"
            )
        for example in sorted(self.counterexamples, key=Counterexample.sort_key)[:10]:
            entries = ",".join(str(x) for x in example.sequence)
            lines.append(
                f"counterexample {example.claim} at ({entries}): "
                f"expected {example.expected!r}, got {example.actual!r} ({example.detail})"
            )
        lines.append("OK" if self.ok else f"FAILED: {len(self.counterexamples)} counterexamples")
        return "\n".join(lines)
