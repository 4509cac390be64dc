"""
Projective, injective and global dimensions by syzygy iteration.

A module over a Nakayama algebra has at most n * max(c) possible
(top, length) states, so the syzygy (or cosyzygy) orbit either reaches
a projective (injective) module or revisits a state. Infinite dimension
is only ever reported after such a revisit.
"""

from dataclasses import dataclass
from typing import Callable, List, Optional, Set, Union

from algebra import AdmissibleSequence, NotCycleAlgebra

from .uniserial import (
    UniserialModule,
    cosyzygy,
    is_injective,
    is_projective,
    simple,
    syzygy,
)
from .errors import ZeroModule


@dataclass(frozen=True)
class HomDim:
    """
    A homological dimension: a nonnegative integer or infinity.

    Attributes:
        value: The finite dimension, or None when infinite.
    """
    value: Optional[int]

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def to_json(self) -> Union[int, str]:
        """JSON form: the integer, or the string "inf"."""
        return "inf" if self.value is None else self.value

    def __str__(self) -> str:
        return "inf" if self.value is None else str(self.value)


INFINITE = HomDim(None)


def _orbit_dimension(
    m: UniserialModule,
    is_terminal: Callable[[UniserialModule], bool],
    step: Callable[[UniserialModule], UniserialModule],
) -> HomDim:
    if m.is_zero:
        raise ZeroModule("dimension of the zero module is undefined")
    seen: Set[UniserialModule] = {m}
    steps = 0
    while not is_terminal(m):
        m = step(m)
        if m in seen:
            return INFINITE
        seen.add(m)
        steps += 1
    return HomDim(steps)


def proj_dim(sequence: AdmissibleSequence, m: UniserialModule) -> HomDim:
    """
    Projective dimension: 0 if M is projective, else 1 + pd(syzygy(M)).

    Raises:
        ZeroModule: If m is zero.
    """
    return _orbit_dimension(
        m,
        lambda x: is_projective(sequence, x),
        lambda x: syzygy(sequence, x),
    )


def inj_dim(sequence: AdmissibleSequence, m: UniserialModule) -> HomDim:
    """
    Injective dimension: 0 if M is injective, else 1 + id(cosyzygy(M)).

    Raises:
        NotCycleAlgebra: If the sequence is a line sequence.
        ZeroModule: If m is zero.
    """
    if not sequence.is_cycle:
        raise NotCycleAlgebra("injective dimensions are only computed for cycle algebras")
    return _orbit_dimension(
        m,
        lambda x: is_injective(sequence, x),
        lambda x: cosyzygy(sequence, x),
    )


def simple_proj_dims(sequence: AdmissibleSequence) -> List[HomDim]:
    """Projective dimensions of S_1, ..., S_n."""
    return [proj_dim(sequence, simple(sequence, i)) for i in range(1, sequence.n + 1)]


def simple_inj_dims(sequence: AdmissibleSequence) -> List[HomDim]:
    """Injective dimensions of S_1, ..., S_n (cycle algebras only)."""
    return [inj_dim(sequence, simple(sequence, i)) for i in range(1, sequence.n + 1)]


def global_dim(sequence: AdmissibleSequence) -> HomDim:
    """Supremum of the projective dimensions of the simples."""
    dims = simple_proj_dims(sequence)
    if any(d.is_infinite for d in dims):
        return INFINITE
    return HomDim(max(d.value for d in dims))
