"""
Left Retraction Module.

For a normalized cycle sequence (p(A) = c_1 = c_n - 1) the left retraction
with respect to S_n is the Nakayama algebra L(A) with n - 1 simples and

    c'_i = c_i - floor((c_i + i - 1) / n),    1 <= i <= n - 1.

The map pi: {1..n} -> {1..n-1} fixes i < n and sends n to 1; it commutes
with the resolution maps: pi(f_A(i)) = f_L(A)(pi(i)).
"""

from typing import Dict, Tuple

import numpy as np

from algebra import (
    AdmissibilityError,
    AdmissibleSequence,
    NotCycleAlgebra,
    is_normalized,
    p_min,
    render,
    rotate,
    validate,
)
from quiver import f_map

from .errors import AlreadySelfInjective, InternalInvariantViolated, NotNormalized


def _require_retractable(sequence: AdmissibleSequence, operation: str) -> None:
    if not sequence.is_cycle:
        raise NotCycleAlgebra(f"{operation} needs a cycle algebra, got ({render(sequence)})")
    if sequence.self_injective:
        raise AlreadySelfInjective(
            f"{operation}: ({render(sequence)}) is self-injective and has no normalized form"
        )


def normalize(sequence: AdmissibleSequence) -> Tuple[AdmissibleSequence, int]:
    """
    Rotate a non-self-injective cycle sequence into normalized form.

    Among the positions i with c_i = p(A) whose cyclic predecessor is p(A) + 1,
    the smallest is rotated to the front.

    Args:
        sequence: A cycle sequence that is not self-injective.

    Returns:
        (normalized sequence, rotation r) with normalized = rotate(sequence, r).

    Raises:
        NotCycleAlgebra: If the sequence is a line sequence.
        AlreadySelfInjective: If the sequence is constant.
    """
    _require_retractable(sequence, "normalize")
    p = p_min(sequence)
    for i in range(1, sequence.n + 1):
        if sequence.entry(i) == p and sequence.entry(i - 1) == p + 1:
            return rotate(sequence, i - 1), i - 1
    raise InternalInvariantViolated(
        f"({render(sequence)}) is not constant but has no normalizing position"
    )


def left_retract(sequence: AdmissibleSequence) -> AdmissibleSequence:
    """
    Left retraction L(A) of a normalized cycle sequence.

    Also accepted when p(A) <= n(A); the result may then be the
    semisimple line sequence (1).

    Args:
        sequence: A normalized, non-self-injective cycle sequence.

    Returns:
        The admissible sequence of L(A), with n - 1 entries.

    Raises:
        NotCycleAlgebra: If the sequence is a line sequence.
        AlreadySelfInjective: If the sequence is constant.
        NotNormalized: If p(A) = c_1 = c_n - 1 fails.
        InternalInvariantViolated: If the result is not admissible.
    """
    _require_retractable(sequence, "left_retract")
    if not is_normalized(sequence):
        raise NotNormalized(
            f"({render(sequence)}) is not normalized: need p(A) = c_1 = c_n - 1"
        )

    n = sequence.n
    c = np.asarray(sequence.c[:-1], dtype=np.int64)
    i = np.arange(1, n, dtype=np.int64)
    retracted = c - np.floor_divide(c + i - 1, n)
    try:
        return validate(int(x) for x in retracted)
    except AdmissibilityError as exc:
        raise InternalInvariantViolated(
            f"left retraction of ({render(sequence)}) is not admissible: {exc}"
        ) from exc


def pi_map(n: int) -> Dict[int, int]:
    """
    The vertex map pi: {1..n} -> {1..n-1}, pi(i) = i for i < n and pi(n) = 1.

    Raises:
        ValueError: If n < 2.
    """
    if n < 2:
        raise ValueError(f"pi is only defined for n >= 2, got n = {n}")
    mapping = {i: i for i in range(1, n)}
    mapping[n] = 1
    return mapping


def check_commuting_square(sequence: AdmissibleSequence) -> bool:
    """
    Whether pi(f_A(i)) = f_L(A)(pi(i)) for every vertex i.

    Raises:
        Same errors as left_retract().
    """
    retracted = left_retract(sequence)
    f_a = f_map(sequence)
    f_l = f_map(retracted)
    pi = pi_map(sequence.n)
    return all(
        pi[f_a.target(i)] == f_l.target(pi[i])
        for i in range(1, sequence.n + 1)
    )


def check_retraction_identities(sequence: AdmissibleSequence) -> bool:
    """
    Whether c'_{pi(i)} + i = k(n - 1) + j whenever c_i + i = kn + j, 1 <= j <= n.

    These are the two pointwise identities (i < n and i = n) behind the
    commuting square.

    Raises:
        Same errors as left_retract().
    """
    retracted = left_retract(sequence)
    n = sequence.n
    pi = pi_map(n)
    quiver = f_map(sequence)
    for i in range(1, n + 1):
        j = quiver.target(i)
        k = (sequence.entry(i) + i - j) // n
        if retracted.entry(pi[i]) + i != k * (n - 1) + j:
            return False
    return True
