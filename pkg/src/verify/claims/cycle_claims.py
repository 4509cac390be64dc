"""
Claims about the cycles of a single resolution quiver.
"""

from algebra import AdmissibleSequence
from modules import gamma
from quiver import cycle_weight, f_map, gamma_consistency
from retraction import selfinjective_cycle_data

from ..claim import ClaimResult
from .analysis import decomposition, direct_cycle_summary


class UniformCyclesClaim:
    """All cycles of R(A) share one size and one weight."""

    @property
    def name(self) -> str:
        return "uniform_cycles"

    @property
    def description(self) -> str:
        return "all cycles of the resolution quiver have the same size and weight"

    def check(self, sequence: AdmissibleSequence) -> ClaimResult:
        pairs = decomposition(sequence).size_weight_pairs()
        if len(pairs) == 1:
            return ClaimResult.ok()
        return ClaimResult.fail(
            expected="one (size, weight) pair",
            actual=sorted(pairs),
            detail="cycles differ in size or weight",
        )


class LoopConsequenceClaim:
    """If some cycle is a loop, every cycle is a loop."""

    @property
    def name(self) -> str:
        return "loop_consequence"

    @property
    def description(self) -> str:
        return "a loop in the resolution quiver forces all cycles to be loops"

    def check(self, sequence: AdmissibleSequence) -> ClaimResult:
        sizes = sorted(cycle.size for cycle in decomposition(sequence).cycles)
        if 1 not in sizes:
            return ClaimResult.ok()
        return ClaimResult.compare([1] * len(sizes), sizes, "a loop coexists with a longer cycle")


class ComponentStructureClaim:
    """
    Functional-graph bookkeeping: one cycle per component, every vertex
    reaches its component's cycle, cycle sizes add up to the cyclic vertex
    count, and n * w(C) equals the sum of c over C.
    """

    @property
    def name(self) -> str:
        return "component_structure"

    @property
    def description(self) -> str:
        return "one cycle per component, integral weights with n*w(C) = sum of c over C"

    def check(self, sequence: AdmissibleSequence) -> ClaimResult:
        quiver = f_map(sequence)
        parts = decomposition(sequence)

        components = len(set(parts.component_of))
        if components != len(parts.cycles):
            return ClaimResult.fail(components, len(parts.cycles), "components vs cycles")

        total = sum(cycle.size for cycle in parts.cycles)
        if total != len(parts.cyclic_vertices):
            return ClaimResult.fail(total, len(parts.cyclic_vertices), "sizes vs cyclic vertices")

        for vertex in range(1, sequence.n + 1):
            x = vertex
            for _ in range(sequence.n):
                x = quiver.target(x)
            component = parts.component_of[vertex - 1]
            if x not in parts.cycles[component].vertices:
                return ClaimResult.fail(
                    parts.cycles[component].vertices, x,
                    f"vertex {vertex} does not reach the cycle of its component",
                )

        for cycle in parts.cycles:
            total_c = sum(sequence.entry(x) for x in cycle.vertices)
            if sequence.n * cycle.weight != total_c:
                return ClaimResult.fail(total_c, sequence.n * cycle.weight, "n * w(C) vs sum of c")
            if cycle_weight(sequence, cycle.vertices) != cycle.weight:
                return ClaimResult.fail(
                    cycle.weight, cycle_weight(sequence, cycle.vertices), "weight formulas"
                )
        return ClaimResult.ok()


class ClosedFormClaim:
    """Self-injective sequences match the gcd closed form."""

    @property
    def name(self) -> str:
        return "selfinjective_closed_form"

    @property
    def description(self) -> str:
        return "(c,...,c) has gcd(n,c) cycles of size n/gcd(n,c) and weight c/gcd(n,c)"

    def check(self, sequence: AdmissibleSequence) -> ClaimResult:
        if not sequence.self_injective:
            return ClaimResult.skip("not self-injective")
        expected = selfinjective_cycle_data(sequence.n, sequence.c[0])
        summary = direct_cycle_summary(sequence)
        actual = summary.to_dict() if summary is not None else None
        return ClaimResult.compare(
            expected.to_dict(), actual, "closed form vs direct decomposition"
        )


class GammaAgreementClaim:
    """gamma(S_i) = tau soc P_i agrees with f(i) for cycle algebras."""

    @property
    def name(self) -> str:
        return "gamma_agreement"

    @property
    def description(self) -> str:
        return "gamma(S_i) = tau soc P_i equals S_f(i) for cycle algebras"

    def check(self, sequence: AdmissibleSequence) -> ClaimResult:
        if not sequence.is_cycle:
            return ClaimResult.skip("line algebra")
        if gamma_consistency(sequence):
            return ClaimResult.ok()
        gammas = [gamma(sequence, i) for i in range(1, sequence.n + 1)]
        return ClaimResult.fail(list(f_map(sequence).f), gammas, "gamma disagrees with f")
