"""
Exhaustive enumeration of admissible sequences within bounds.
"""

from typing import Iterator, List

from algebra import AdmissibilityError, AdmissibleSequence, validate


def _extend(prefix: List[int], n: int, c_max: int) -> Iterator[List[int]]:
    """Depth-first, lexicographic; prunes prefixes that break c_{i+1} >= c_i - 1."""
    position = len(prefix)
    if position == n:
        yield list(prefix)
        return

    low = 1
    if position > 0:
        low = max(low, prefix[-1] - 1)
    if position < n - 1:
        # an entry 1 before the end is never admissible
        low = max(low, 2)

    for value in range(low, c_max + 1):
        prefix.append(value)
        yield from _extend(prefix, n, c_max)
        prefix.pop()


def enumerate_admissible(n_max: int, c_max: int) -> Iterator[AdmissibleSequence]:
    """
    Yield every admissible sequence with n <= n_max and all c_i <= c_max.

    Line and cycle sequences are both produced, each exactly once, ordered
    by n and then lexicographically by entries.

    Args:
        n_max: Largest number of simples, at least 1.
        c_max: Largest entry, at least 1.

    Raises:
        ValueError: If a bound is below 1.
    """
    if n_max < 1 or c_max < 1:
        raise ValueError(f"bounds must be positive, got n_max={n_max}, c_max={c_max}")

    for n in range(1, n_max + 1):
        for candidate in _extend([], n, c_max):
            try:
                yield validate(candidate)
            except AdmissibilityError:
                continue
