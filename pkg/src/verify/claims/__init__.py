"""
Verification Claims

This module exports all built-in claim implementations.
"""

from .cycle_claims import (
    ClosedFormClaim,
    ComponentStructureClaim,
    GammaAgreementClaim,
    LoopConsequenceClaim,
    UniformCyclesClaim,
)
from .dimension_claims import (
    DimensionCountClaim,
    LineFiniteGlobalDimensionClaim,
    UnliftedChainClaim,
)
from .retraction_claims import (
    ChainOracleClaim,
    CommutingSquareClaim,
    LiftShiftClaim,
    RetractionBijectionClaim,
)

__all__ = [
    'ChainOracleClaim',
    'ClosedFormClaim',
    'CommutingSquareClaim',
    'ComponentStructureClaim',
    'DimensionCountClaim',
    'GammaAgreementClaim',
    'LiftShiftClaim',
    'LineFiniteGlobalDimensionClaim',
    'LoopConsequenceClaim',
    'RetractionBijectionClaim',
    'UniformCyclesClaim',
    'UnliftedChainClaim',
]
