"""
Exhaustive verification of the statements about resolution quivers.

This package enumerates admissible sequences, runs a registry of claims
over them and collects the results into a report.
"""

from .checks import (
    check_dimension_counts,
    check_line_global_dimension,
    check_loop_consequence,
    check_normalized_retraction,
    check_shift,
    check_uniform_cycles,
)
from .claim import Claim, ClaimResult, Outcome
from .claim_registry import ClaimRegistry, get_registry, registry_snapshot
from .config import SuiteConfig
from .enumeration import enumerate_admissible
from .report import ClaimTally, Counterexample, VerificationReport
from .suite import check_sequence, run_suite

__all__ = [
    'check_dimension_counts',
    'check_line_global_dimension',
    'check_loop_consequence',
    'check_normalized_retraction',
    'check_shift',
    'check_uniform_cycles',
    'Claim',
    'ClaimResult',
    'Outcome',
    'ClaimRegistry',
    'get_registry',
    'registry_snapshot',
    'SuiteConfig',
    'enumerate_admissible',
    'ClaimTally',
    'Counterexample',
    'VerificationReport',
    'check_sequence',
    'run_suite',
]
