"""
Admissible sequences of connected Nakayama algebras.

This package validates, classifies and transforms Kupisch series.
"""

from .admissible_sequence import (
    AdmissibleSequence,
    AlgebraKind,
    is_normalized,
    lift,
    p_min,
    parse_sequence,
    render,
    rotate,
    validate,
    wrap,
)
from .errors import (
    AdmissibilityError,
    EmptySequence,
    LineEntryTooSmall,
    MixedKind,
    NonIntegerEntry,
    NonPositiveEntry,
    NotCycleAlgebra,
    SequenceParseError,
    ViolatesFactorCondition,
)

__all__ = [
    'AdmissibleSequence',
    'AlgebraKind',
    'is_normalized',
    'lift',
    'p_min',
    'parse_sequence',
    'render',
    'rotate',
    'validate',
    'wrap',
    'AdmissibilityError',
    'EmptySequence',
    'LineEntryTooSmall',
    'MixedKind',
    'NonIntegerEntry',
    'NonPositiveEntry',
    'NotCycleAlgebra',
    'SequenceParseError',
    'ViolatesFactorCondition',
]
