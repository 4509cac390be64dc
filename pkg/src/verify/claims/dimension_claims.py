"""
Claims tying homological dimensions to the shape of the algebra.

The two cyclic-vertex claims apply only to cycle algebras of infinite
global dimension; a finite-global-dimension cycle algebra such as
(3,3,3,4) still has a cyclic vertex, so the per-vertex statement fails
without that guard. Line algebras are covered by their own claim: their
global dimension is always finite.
"""

from typing import List, Sequence

from algebra import AdmissibleSequence
from modules import HomDim, global_dim
from retraction import unlifted_chain

from ..claim import ClaimResult
from .analysis import decomposition, gldim, inj_dims, proj_dims


def _infinite_vertices(dims: Sequence[HomDim]) -> List[int]:
    return [i for i, d in enumerate(dims, start=1) if d.is_infinite]


def check_dimension_counts(sequence: AdmissibleSequence) -> ClaimResult:
    """
    #cyclic = #{pd S_i infinite} = #{id S_i infinite}, and vertex i is
    cyclic exactly when id S_i is infinite.
    """
    if not sequence.is_cycle:
        return ClaimResult.skip("line algebra")
    if not gldim(sequence).is_infinite:
        return ClaimResult.skip("finite global dimension")

    cyclic = sorted(decomposition(sequence).cyclic_vertices)
    infinite_pd = _infinite_vertices(proj_dims(sequence))
    infinite_id = _infinite_vertices(inj_dims(sequence))

    if len(cyclic) != len(infinite_pd):
        return ClaimResult.fail(len(cyclic), len(infinite_pd),
                                "cyclic vertices vs simples of infinite projective dimension")
    if len(infinite_pd) != len(infinite_id):
        return ClaimResult.fail(len(infinite_pd), len(infinite_id),
                                "infinite projective vs infinite injective dimension counts")
    return ClaimResult.compare(cyclic, infinite_id,
                               "cyclic vertices differ from simples of infinite injective dimension")


class DimensionCountClaim:
    """Cyclic vertices count the simples of infinite projective and injective dimension."""

    @property
    def name(self) -> str:
        return "dimension_counts"

    @property
    def description(self) -> str:
        return "gldim infinite: #cyclic = #{pd S = inf} = #{id S = inf}, cyclic iff id S = inf"

    def check(self, sequence: AdmissibleSequence) -> ClaimResult:
        return check_dimension_counts(sequence)


class UnliftedChainClaim:
    """
    Retracting A itself keeps infinite global dimension at every stage, and
    the terminal self-injective algebra has one simple per simple of A of
    infinite projective dimension.
    """

    @property
    def name(self) -> str:
        return "unlifted_chain"

    @property
    def description(self) -> str:
        return "gldim infinite: retraction stays infinite and ends with n = #{pd S = inf}"

    def check(self, sequence: AdmissibleSequence) -> ClaimResult:
        if not sequence.is_cycle:
            return ClaimResult.skip("line algebra")
        if not gldim(sequence).is_infinite:
            return ClaimResult.skip("finite global dimension")

        chain = unlifted_chain(sequence)
        for stage in chain.stages():
            if not stage.is_cycle or not global_dim(stage).is_infinite:
                return ClaimResult.fail("cycle algebra of infinite global dimension",
                                        list(stage.c), "retraction left infinite global dimension")

        terminal = chain.terminal
        if not terminal.self_injective:
            return ClaimResult.fail("self-injective", list(terminal.c), "chain did not terminate")
        infinite_pd = _infinite_vertices(proj_dims(sequence))
        return ClaimResult.compare(len(infinite_pd), terminal.n,
                                   "terminal size vs simples of infinite projective dimension")


def check_line_global_dimension(sequence: AdmissibleSequence) -> ClaimResult:
    """
    A line algebra has finite global dimension, at most n - 1.

    Syzygies of a line module have strictly larger tops, so pd S_i <= n - i.
    """
    if sequence.is_cycle:
        return ClaimResult.skip("cycle algebra")
    dimension = gldim(sequence)
    if dimension.is_infinite:
        return ClaimResult.fail("finite", "inf", "line algebra of infinite global dimension")
    if dimension.value > sequence.n - 1:
        return ClaimResult.fail(f"<= {sequence.n - 1}", dimension.value,
                                "global dimension exceeds n - 1")
    return ClaimResult.ok()


class LineFiniteGlobalDimensionClaim:
    """Every line algebra has finite global dimension."""

    @property
    def name(self) -> str:
        return "line_finite_global_dimension"

    @property
    def description(self) -> str:
        return "line algebra: gldim finite and at most n - 1"

    def check(self, sequence: AdmissibleSequence) -> ClaimResult:
        return check_line_global_dimension(sequence)
