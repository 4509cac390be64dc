"""
Claims relating a cycle sequence to its left retraction, its lift and its
retraction chain.
"""

from collections import Counter
from typing import Tuple

from algebra import AdmissibleSequence, lift
from quiver import decompose, f_map
from retraction import (
    chain_cycle_summary,
    check_commuting_square,
    check_retraction_identities,
    left_retract,
    normalize,
    pi_map,
)

from ..claim import ClaimResult
from .analysis import decomposition, direct_cycle_summary


def _canonical(vertices: Tuple[int, ...]) -> Tuple[int, ...]:
    pivot = vertices.index(min(vertices))
    return vertices[pivot:] + vertices[:pivot]


def _retractable(sequence: AdmissibleSequence) -> bool:
    return sequence.is_cycle and not sequence.self_injective


class CommutingSquareClaim:
    """pi(f_A(i)) = f_L(A)(pi(i)) on the normalized form, pointwise."""

    @property
    def name(self) -> str:
        return "commuting_square"

    @property
    def description(self) -> str:
        return "pi f_A = f_L(A) pi, with c'_pi(i) + i = k(n-1) + j when c_i + i = kn + j"

    def check(self, sequence: AdmissibleSequence) -> ClaimResult:
        if not _retractable(sequence):
            return ClaimResult.skip("needs a non-self-injective cycle algebra")
        normalized, _ = normalize(sequence)
        if not check_commuting_square(normalized):
            return ClaimResult.fail(True, False, f"square fails for ({normalized})")
        if not check_retraction_identities(normalized):
            return ClaimResult.fail(True, False, f"retraction identities fail for ({normalized})")
        return ClaimResult.ok()


def check_retraction_bijection(normalized: AdmissibleSequence) -> ClaimResult:
    """
    Compare R(A) with R(L(A)) for a normalized sequence.

    pi identifies only 1 and n; f_A(1) = f_A(n); 1 and n are not both
    cyclic; pi carries the cycles of R(A) bijectively onto those of R(L(A))
    keeping sizes and weights; component counts and cyclic vertex counts
    agree.
    """
    n = normalized.n
    pi = pi_map(n)
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            merged = pi[x] == pi[y]
            if merged != (x == y or {x, y} == {1, n}):
                return ClaimResult.fail([1, n], [x, y], "pi identifies an unexpected pair")

    quiver = f_map(normalized)
    if quiver.target(1) != quiver.target(n):
        return ClaimResult.fail(quiver.target(1), quiver.target(n), "f(1) differs from f(n)")

    before = decompose(quiver)
    if 1 in before.cyclic_vertices and n in before.cyclic_vertices:
        return ClaimResult.fail("at most one of 1, n cyclic", sorted(before.cyclic_vertices),
                                "vertices 1 and n are both cyclic")

    retracted = left_retract(normalized)
    after = decompose(f_map(retracted))
    if before.component_count != after.component_count:
        return ClaimResult.fail(before.component_count, after.component_count,
                                "component counts differ")
    if len(before.cyclic_vertices) != len(after.cyclic_vertices):
        return ClaimResult.fail(len(before.cyclic_vertices), len(after.cyclic_vertices),
                                "cyclic vertex counts differ")

    image = {_canonical(tuple(pi[x] for x in cycle.vertices)): cycle.weight
             for cycle in before.cycles}
    target = {cycle.vertices: cycle.weight for cycle in after.cycles}
    if image != target:
        return ClaimResult.fail(sorted(target.items()), sorted(image.items()),
                                "pi does not carry cycles onto cycles with equal weights")

    pairs_before = Counter((cycle.size, cycle.weight) for cycle in before.cycles)
    pairs_after = Counter((cycle.size, cycle.weight) for cycle in after.cycles)
    return ClaimResult.compare(sorted(pairs_before.items()), sorted(pairs_after.items()),
                               "(size, weight) multisets differ")


class RetractionBijectionClaim:
    """Cycles of R(A) and R(L(A)) correspond under pi with equal sizes and weights."""

    @property
    def name(self) -> str:
        return "retraction_bijection"

    @property
    def description(self) -> str:
        return "pi induces a size- and weight-preserving bijection of cycles of R(A) and R(L(A))"

    def check(self, sequence: AdmissibleSequence) -> ClaimResult:
        if not _retractable(sequence):
            return ClaimResult.skip("needs a non-self-injective cycle algebra")
        normalized, _ = normalize(sequence)
        return check_retraction_bijection(normalized)


def check_lift_shift(sequence: AdmissibleSequence) -> ClaimResult:
    """f is unchanged by lift(A, 1) and each cycle gains its size in weight."""
    lifted = lift(sequence, 1)
    if f_map(lifted).f != f_map(sequence).f:
        return ClaimResult.fail(list(f_map(sequence).f), list(f_map(lifted).f), "f changed")
    expected = [(cycle.vertices, cycle.weight + cycle.size)
                for cycle in decomposition(sequence).cycles]
    actual = [(cycle.vertices, cycle.weight) for cycle in decomposition(lifted).cycles]
    return ClaimResult.compare(expected, actual, "lifted weights are not w + s")


class LiftShiftClaim:
    """Adding n to every entry keeps R(A) and adds s(C) to every weight."""

    @property
    def name(self) -> str:
        return "lift_shift"

    @property
    def description(self) -> str:
        return "lifting by n keeps the resolution quiver and adds size to weight"

    def check(self, sequence: AdmissibleSequence) -> ClaimResult:
        if not sequence.is_cycle:
            return ClaimResult.skip("line algebra")
        return check_lift_shift(sequence)


class ChainOracleClaim:
    """The retraction chain and the direct decomposition give the same cycle data."""

    @property
    def name(self) -> str:
        return "chain_oracle"

    @property
    def description(self) -> str:
        return "(count, size, weight) via lift/retract/closed form equals the direct decomposition"

    def check(self, sequence: AdmissibleSequence) -> ClaimResult:
        if not sequence.is_cycle:
            return ClaimResult.skip("line algebra")
        direct = direct_cycle_summary(sequence)
        via_chain = chain_cycle_summary(sequence)
        return ClaimResult.compare(
            direct.to_dict() if direct is not None else None,
            via_chain.to_dict(),
            "chain summary differs from direct decomposition",
        )
