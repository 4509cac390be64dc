"""
Normalization, left retraction and retraction chains of cycle sequences.
"""

from .errors import AlreadySelfInjective, InternalInvariantViolated, NotNormalized
from .left_retraction import (
    check_commuting_square,
    check_retraction_identities,
    left_retract,
    normalize,
    pi_map,
)
from .retraction_chain import (
    CycleSummary,
    RetractionChain,
    RetractionStep,
    StepKind,
    chain_cycle_summary,
    retraction_chain,
    selfinjective_cycle_data,
    unlifted_chain,
)

__all__ = [
    'AlreadySelfInjective',
    'InternalInvariantViolated',
    'NotNormalized',
    'check_commuting_square',
    'check_retraction_identities',
    'left_retract',
    'normalize',
    'pi_map',
    'CycleSummary',
    'RetractionChain',
    'RetractionStep',
    'StepKind',
    'chain_cycle_summary',
    'retraction_chain',
    'selfinjective_cycle_data',
    'unlifted_chain',
]
