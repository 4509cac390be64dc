"""
Single-sequence checks of the proved statements about resolution quivers.

Each function returns a ClaimResult; a FAIL always carries the expected
and the computed value.
"""

from algebra import AdmissibleSequence, NotCycleAlgebra, is_normalized, render
from retraction import AlreadySelfInjective, NotNormalized

from .claim import ClaimResult
from .claim_registry import get_registry
from .claims.retraction_claims import check_retraction_bijection


def check_uniform_cycles(sequence: AdmissibleSequence) -> ClaimResult:
    """All cycles of R(A) have the same size and the same weight."""
    return get_registry().get_claim("uniform_cycles").check(sequence)


def check_loop_consequence(sequence: AdmissibleSequence) -> ClaimResult:
    """If R(A) has a loop, all its cycles are loops."""
    return get_registry().get_claim("loop_consequence").check(sequence)


def check_normalized_retraction(sequence: AdmissibleSequence) -> ClaimResult:
    """
    Compare the cycles of R(A) and R(L(A)) for a normalized sequence.

    Raises:
        NotCycleAlgebra: If the sequence is a line sequence.
        AlreadySelfInjective: If the sequence is constant.
        NotNormalized: If p(A) = c_1 = c_n - 1 fails.
    """
    if not sequence.is_cycle:
        raise NotCycleAlgebra(f"({render(sequence)}) is a line sequence")
    if sequence.self_injective:
        raise AlreadySelfInjective(f"({render(sequence)}) is self-injective")
    if not is_normalized(sequence):
        raise NotNormalized(f"({render(sequence)}) is not normalized")
    return check_retraction_bijection(sequence)


def check_shift(sequence: AdmissibleSequence) -> ClaimResult:
    """
    lift(A, 1) has the same resolution quiver and every weight grows by the size.

    Raises:
        NotCycleAlgebra: If the sequence is a line sequence.
    """
    if not sequence.is_cycle:
        raise NotCycleAlgebra(f"({render(sequence)}) is a line sequence")
    return get_registry().get_claim("lift_shift").check(sequence)


def check_dimension_counts(sequence: AdmissibleSequence) -> ClaimResult:
    """
    Cyclic-vertex count against infinite projective and injective dimensions.

    NOT_APPLICABLE for line algebras and for finite global dimension.
    """
    return get_registry().get_claim("dimension_counts").check(sequence)


def check_line_global_dimension(sequence: AdmissibleSequence) -> ClaimResult:
    """
    Finite global dimension, at most n - 1, for a line algebra.

    NOT_APPLICABLE for cycle algebras.
    """
    return get_registry().get_claim("line_finite_global_dimension").check(sequence)
