"""
Cached per-sequence computations shared by the claims.

Several claims look at the same decomposition and the same dimension
tables; sequences are immutable and hashable, so results are memoized.
"""

from functools import lru_cache
from typing import Optional, Tuple

from algebra import AdmissibleSequence
from modules import HomDim, global_dim, simple_inj_dims, simple_proj_dims
from quiver import ComponentDecomposition, decompose, f_map
from retraction import CycleSummary

_CACHE_SIZE = 4096


@lru_cache(maxsize=_CACHE_SIZE)
def decomposition(sequence: AdmissibleSequence) -> ComponentDecomposition:
    return decompose(f_map(sequence))


@lru_cache(maxsize=_CACHE_SIZE)
def proj_dims(sequence: AdmissibleSequence) -> Tuple[HomDim, ...]:
    return tuple(simple_proj_dims(sequence))


@lru_cache(maxsize=_CACHE_SIZE)
def inj_dims(sequence: AdmissibleSequence) -> Tuple[HomDim, ...]:
    return tuple(simple_inj_dims(sequence))


@lru_cache(maxsize=_CACHE_SIZE)
def gldim(sequence: AdmissibleSequence) -> HomDim:
    return global_dim(sequence)


def direct_cycle_summary(sequence: AdmissibleSequence) -> Optional[CycleSummary]:
    """
    (count, size, weight) read off the resolution quiver directly.

    Returns:
        The summary, or None when the cycles do not share one size and weight.
    """
    cycles = decomposition(sequence).cycles
    pairs = {(cycle.size, cycle.weight) for cycle in cycles}
    if len(pairs) != 1:
        return None
    size, weight = pairs.pop()
    return CycleSummary(count=len(cycles), size=size, weight=weight)
