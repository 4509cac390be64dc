"""
Claim Registry

Manages registration and access to verification claims.
Implements a singleton pattern so that every sweep runs the same claims.
"""

from typing import Dict, List, Optional

from .claim import Claim
from .claims import (
    ChainOracleClaim,
    ClosedFormClaim,
    CommutingSquareClaim,
    ComponentStructureClaim,
    DimensionCountClaim,
    GammaAgreementClaim,
    LiftShiftClaim,
    LineFiniteGlobalDimensionClaim,
    LoopConsequenceClaim,
    RetractionBijectionClaim,
    UniformCyclesClaim,
    UnliftedChainClaim,
)


class ClaimRegistry:
    """
    Singleton registry for verification claims.

    Claims are kept in registration order, which is also the order of the
    rows in a report.
    """

    _instance: Optional['ClaimRegistry'] = None

    def __new__(cls) -> 'ClaimRegistry':
        """Ensure only one instance of the registry exists."""
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._instance._claims = {}
            cls._instance._initialize_claims()
        return cls._instance

    def _initialize_claims(self) -> None:
        """Initialize and register all built-in claims."""
        claims = [
            UniformCyclesClaim(),
            LoopConsequenceClaim(),
            ComponentStructureClaim(),
            ClosedFormClaim(),
            GammaAgreementClaim(),
            CommutingSquareClaim(),
            RetractionBijectionClaim(),
            LiftShiftClaim(),
            ChainOracleClaim(),
            DimensionCountClaim(),
            UnliftedChainClaim(),
            LineFiniteGlobalDimensionClaim(),
        ]

        for claim in claims:
            self._claims[claim.name] = claim

    def get_claim(self, name: str) -> Claim:
        """
        Get a claim by name.

        Raises:
            KeyError: If the claim name is not registered.
        """
        if name not in self._claims:
            raise KeyError(
                f"Unknown claim: '{name}'. "
                f"Available claims: {list(self._claims.keys())}"
            )
        return self._claims[name]

    def get_available_claims(self) -> List[str]:
        """Names of all registered claims, in registration order."""
        return list(self._claims.keys())

    def claims(self) -> List[Claim]:
        """All registered claims, in registration order."""
        return list(self._claims.values())

    def register_claim(self, claim: Claim) -> None:
        """
        Register an additional claim.

        Raises:
            ValueError: If a claim with the same name is already registered.
        """
        if claim.name in self._claims:
            raise ValueError(
                f"Claim '{claim.name}' is already registered. "
                f"Use a different name or unregister the existing claim first."
            )
        self._claims[claim.name] = claim

    def unregister_claim(self, name: str) -> None:
        """
        Unregister a claim.

        Raises:
            KeyError: If the claim name is not registered.
        """
        if name not in self._claims:
            raise KeyError(f"Claim '{name}' is not registered")
        del self._claims[name]


def get_registry() -> ClaimRegistry:
    """Get the singleton claim registry instance."""
    return ClaimRegistry()


def registry_snapshot() -> Dict[str, str]:
    """Map of claim name to description, for reports and help text."""
    return {claim.name: claim.description for claim in get_registry().claims()}
