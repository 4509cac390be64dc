"""
Retraction Chain Module.

Repeated left retraction takes a cycle sequence to a self-injective one.
Lifting first by n (when p(A) <= n(A)) keeps every stage a cycle algebra
with p > n, and the cycle data of the self-injective end is known in closed
form. Undoing the lift recovers the cycle data of the starting algebra
without ever looking at its resolution quiver.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum, auto
from math import gcd
from typing import Any, Dict, List, Optional, Tuple

from algebra import AdmissibleSequence, NotCycleAlgebra, lift, p_min, render

from .errors import InternalInvariantViolated
from .left_retraction import left_retract, normalize

logger = logging.getLogger(__name__)


class StepKind(Enum):
    """Kinds of step in a retraction chain."""
    LIFT = auto()
    ROTATE = auto()
    RETRACT = auto()


@dataclass(frozen=True)
class RetractionStep:
    """
    One audited step of a retraction chain.

    Attributes:
        kind: Lift, rotate or retract.
        source: Sequence before the step.
        result: Sequence after the step.
        amount: Lift multiple t or rotation r; None for retractions.
    """
    kind: StepKind
    source: AdmissibleSequence
    result: AdmissibleSequence
    amount: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        """
        Serialize the step to a dictionary.

        Returns:
            {"kind", "amount", "input", "output"} with sequences as entry lists.
        """
        return {
            "kind": self.kind.name.lower(),
            "amount": self.amount,
            "input": list(self.source.c),
            "output": list(self.result.c),
        }

    def __str__(self) -> str:
        label = self.kind.name.capitalize()
        if self.amount is not None:
            label = f"{label}({self.amount})"
        return f"{label}: ({render(self.source)}) -> ({render(self.result)})"


@dataclass(frozen=True)
class RetractionChain:
    """
    The sequence of steps from an algebra to a self-injective one.

    Attributes:
        start: The starting sequence.
        steps: Ordered steps; empty when start is already terminal.
        lift_multiple: Total lift t0 applied at the start (0 or 1).
    """
    start: AdmissibleSequence
    steps: Tuple[RetractionStep, ...] = field(default_factory=tuple)
    lift_multiple: int = 0

    @property
    def terminal(self) -> AdmissibleSequence:
        """Last sequence of the chain."""
        return self.steps[-1].result if self.steps else self.start

    @property
    def retract_count(self) -> int:
        return sum(1 for step in self.steps if step.kind is StepKind.RETRACT)

    def stages(self) -> List[AdmissibleSequence]:
        """The start followed by the result of every step."""
        return [self.start] + [step.result for step in self.steps]

    def to_dict(self) -> Dict[str, Any]:
        """Serialize the chain to a dictionary."""
        return {
            "start": list(self.start.c),
            "lift_multiple": self.lift_multiple,
            "steps": [step.to_dict() for step in self.steps],
            "terminal": list(self.terminal.c),
        }


@dataclass(frozen=True)
class CycleSummary:
    """
    Aggregate cycle data of a resolution quiver whose cycles are uniform.

    Attributes:
        count: Number of cycles (equal to the number of components).
        size: Common size of the cycles.
        weight: Common weight of the cycles.
    """
    count: int
    size: int
    weight: int

    def to_dict(self) -> Dict[str, int]:
        return {"count": self.count, "size": self.size, "weight": self.weight}


def selfinjective_cycle_data(n: int, c: int) -> CycleSummary:
    """
    Cycle data of the constant sequence (c, ..., c) of length n.

    All n vertices are cyclic and split into gcd(n, c) cycles of size
    n / gcd(n, c) and weight c / gcd(n, c).

    Raises:
        ValueError: If n < 1 or c < 1, or c = 1 with n > 1.
    """
    if n < 1 or c < 1 or (c == 1 and n > 1):
        raise ValueError(f"({c},...,{c}) of length {n} is not a self-injective sequence")
    divisor = gcd(n, c)
    return CycleSummary(count=divisor, size=n // divisor, weight=c // divisor)


def _require_cycle(sequence: AdmissibleSequence, operation: str) -> None:
    if not sequence.is_cycle:
        raise NotCycleAlgebra(f"{operation} needs a cycle algebra, got ({render(sequence)})")


def _check_stage(sequence: AdmissibleSequence, start: AdmissibleSequence) -> None:
    if not sequence.is_cycle:
        raise InternalInvariantViolated(
            f"chain from ({render(start)}) reached line sequence ({render(sequence)})"
        )
    if p_min(sequence) <= sequence.n:
        raise InternalInvariantViolated(
            f"chain from ({render(start)}) reached ({render(sequence)}) "
            f"with p = {p_min(sequence)} <= n = {sequence.n}"
        )


def _retract_to_terminal(
    current: AdmissibleSequence,
    steps: List[RetractionStep],
    start: AdmissibleSequence,
    enforce_bound: bool,
) -> None:
    """Append rotate/retract steps until current is self-injective or a line."""
    while current.is_cycle and not current.self_injective:
        normalized, r = normalize(current)
        if r != 0:
            steps.append(RetractionStep(StepKind.ROTATE, current, normalized, amount=r))
            logger.debug("rotate by %d: (%s) -> (%s)", r, render(current), render(normalized))
        retracted = left_retract(normalized)
        steps.append(RetractionStep(StepKind.RETRACT, normalized, retracted))
        logger.debug("retract: (%s) -> (%s)", render(normalized), render(retracted))
        if enforce_bound:
            _check_stage(retracted, start)
        current = retracted

    retracts = sum(1 for step in steps if step.kind is StepKind.RETRACT)
    if retracts > start.n - 1:
        raise InternalInvariantViolated(
            f"chain from ({render(start)}) used {retracts} retractions, more than n - 1"
        )


def retraction_chain(sequence: AdmissibleSequence) -> RetractionChain:
    """
    Lift if needed, then normalize and retract until self-injective.

    A single Lift(1) is applied when p(A) <= n(A); afterwards every stage is
    a cycle sequence with p > n.

    Args:
        sequence: A cycle sequence.

    Returns:
        The audited chain.

    Raises:
        NotCycleAlgebra: If the sequence is a line sequence.
        InternalInvariantViolated: If some stage breaks p > n or leaves the
            cycle algebras.
    """
    _require_cycle(sequence, "retraction_chain")
    steps: List[RetractionStep] = []
    current = sequence
    lift_multiple = 0
    if p_min(sequence) <= sequence.n:
        current = lift(sequence, 1)
        lift_multiple = 1
        steps.append(RetractionStep(StepKind.LIFT, sequence, current, amount=1))
        logger.debug("lift by n: (%s) -> (%s)", render(sequence), render(current))
    _check_stage(current, sequence)

    _retract_to_terminal(current, steps, sequence, enforce_bound=True)
    return RetractionChain(start=sequence, steps=tuple(steps), lift_multiple=lift_multiple)


def unlifted_chain(sequence: AdmissibleSequence) -> RetractionChain:
    """
    Normalize and retract the sequence itself, with no initial lift.

    Stops at the first self-injective sequence or at a line sequence. For
    cycle algebras of infinite global dimension every stage stays a cycle
    algebra and the terminal algebra has as many simples as A has simples of
    infinite projective dimension.

    Raises:
        NotCycleAlgebra: If the sequence is a line sequence.
    """
    _require_cycle(sequence, "unlifted_chain")
    steps: List[RetractionStep] = []
    _retract_to_terminal(sequence, steps, sequence, enforce_bound=False)
    return RetractionChain(start=sequence, steps=tuple(steps), lift_multiple=0)


def chain_cycle_summary(sequence: AdmissibleSequence) -> CycleSummary:
    """
    Cycle data of R(A) computed through the retraction chain alone.

    Counts and sizes pass unchanged along the chain; the weight of the
    terminal closed form is reduced by lift_multiple * size.

    Raises:
        NotCycleAlgebra: If the sequence is a line sequence.
        InternalInvariantViolated: If the chain misbehaves or ends on a
            non-constant sequence.
    """
    chain = retraction_chain(sequence)
    terminal = chain.terminal
    if not terminal.self_injective or len(set(terminal.c)) != 1:
        raise InternalInvariantViolated(
            f"chain from ({render(sequence)}) ended on non-uniform ({render(terminal)})"
        )
    closed_form = selfinjective_cycle_data(terminal.n, terminal.c[0])
    return CycleSummary(
        count=closed_form.count,
        size=closed_form.size,
        weight=closed_form.weight - chain.lift_multiple * closed_form.size,
    )
