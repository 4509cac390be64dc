"""
Verification Suite Module.

Runs every registered claim over the full enumeration. Failures and
unexpected exceptions are recorded as counterexamples; the sweep never
stops early, so the first counterexample in enumeration order is minimal.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import islice
from typing import Iterable, Iterator, List, Tuple

from algebra import AdmissibleSequence, render, validate

from .claim import ClaimResult, Outcome
from .claim_registry import get_registry
from .config import SuiteConfig
from .enumeration import enumerate_admissible
from .report import ClaimTally, Counterexample, VerificationReport

logger = logging.getLogger(__name__)

BATCH_SIZE = 2000


def _empty_report(config: SuiteConfig) -> VerificationReport:
    report = VerificationReport(config=config)
    for name in get_registry().get_available_claims():
        report.tallies[name] = ClaimTally()
    return report


def check_sequence(sequence: AdmissibleSequence, report: VerificationReport) -> None:
    """Run every registered claim on one sequence and record the outcomes."""
    report.sequences_enumerated += 1
    for claim in get_registry().claims():
        try:
            result = claim.check(sequence)
        except Exception as exc:
            result = ClaimResult.fail("no error", type(exc).__name__, str(exc))
        if result.outcome is Outcome.FAIL:
            logger.warning(
                "claim %s fails at (%s): expected %r, got %r",
                claim.name, render(sequence), result.expected, result.actual,
            )
        report.record(claim.name, sequence.c, result)


def _run_batch(batch: List[Tuple[int, ...]], config: SuiteConfig) -> VerificationReport:
    report = _empty_report(config)
    for entries in batch:
        check_sequence(validate(entries), report)
    return report


def _batches(sequences: Iterable[AdmissibleSequence]) -> Iterator[List[Tuple[int, ...]]]:
    iterator = iter(sequences)
    while True:
        batch = [sequence.c for sequence in islice(iterator, BATCH_SIZE)]
        if not batch:
            return
        yield batch


def run_suite(config: SuiteConfig) -> VerificationReport:
    """
    Check every claim on every admissible sequence within the bounds.

    Args:
        config: Bounds and worker count.

    Returns:
        The merged, canonically ordered report.

    Raises:
        ValueError: If the configuration is invalid.
    """
    if not config.validate():
        raise ValueError(f"invalid suite configuration: {config.to_dict()}")

    logger.info("verifying n <= %d, c_i <= %d with %d worker(s)",
                config.n_max, config.c_max, config.workers)
    report = _empty_report(config)
    sequences = enumerate_admissible(config.n_max, config.c_max)

    if config.workers == 1:
        for sequence in sequences:
            check_sequence(sequence, report)
    else:
        with ProcessPoolExecutor(max_workers=config.workers) as executor:
            batches = list(_batches(sequences))
            for partial in executor.map(_run_batch, batches, [config] * len(batches)):
                report.merge(partial)

    report.counterexamples.sort(key=Counterexample.sort_key)
    logger.info("checked %d sequences, %d counterexamples",
                report.sequences_enumerated, len(report.counterexamples))
    return report
