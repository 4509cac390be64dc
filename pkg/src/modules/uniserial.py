"""
Uniserial Module Calculus.

Every indecomposable module over a Nakayama algebra is uniserial and is
determined by its top S_a and its length l. Its composition factors, top
to socle, are S_a, S_{a+1}, ..., S_{a+l-1}, and it exists exactly when
1 <= l <= c_a. Projective covers, syzygies, injective envelopes,
cosyzygies and the translate tau all reduce to index arithmetic on
(top, length).
"""

from dataclasses import dataclass

import numpy as np

from algebra import AdmissibleSequence, NotCycleAlgebra

from .errors import InjectiveModule, ProjectiveModule, ZeroModule


@dataclass(frozen=True)
class UniserialModule:
    """
    An indecomposable module M(top, length), or the zero module.

    Attributes:
        top: Vertex a of the top S_a (0 for the zero module).
        length: Composition length l (0 for the zero module).
    """
    top: int
    length: int

    @property
    def is_zero(self) -> bool:
        return self.length == 0

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return f"M({self.top},{self.length})"


ZERO = UniserialModule(top=0, length=0)


def module(sequence: AdmissibleSequence, top: int, length: int) -> UniserialModule:
    """
    Build M(top, length) over the algebra, checking that it exists.

    Raises:
        ValueError: If length is not in 1..c_top.
    """
    top = sequence.vertex(top)
    if not 1 <= length <= sequence.entry(top):
        raise ValueError(
            f"no uniserial module with top S_{top} and length {length}: "
            f"need 1 <= length <= c_{top} = {sequence.entry(top)}"
        )
    return UniserialModule(top=top, length=length)


def simple(sequence: AdmissibleSequence, i: int) -> UniserialModule:
    """The simple module S_i."""
    return module(sequence, i, 1)


def _require_nonzero(m: UniserialModule) -> None:
    if m.is_zero:
        raise ZeroModule("operation is undefined on the zero module")


def _require_cycle(sequence: AdmissibleSequence, operation: str) -> None:
    if not sequence.is_cycle:
        raise NotCycleAlgebra(f"{operation} is only implemented for cycle algebras")


def proj_cover(sequence: AdmissibleSequence, i: int) -> UniserialModule:
    """Projective cover P_i = M(i, c_i) of the simple S_i."""
    i = sequence.vertex(i)
    return UniserialModule(top=i, length=sequence.entry(i))


def is_projective(sequence: AdmissibleSequence, m: UniserialModule) -> bool:
    _require_nonzero(m)
    return m.length == sequence.entry(m.top)


def socle(sequence: AdmissibleSequence, m: UniserialModule) -> int:
    """
    Index b of the socle S_b of a nonzero module: b = wrap(a + l - 1).

    Raises:
        ZeroModule: If m is zero.
    """
    _require_nonzero(m)
    return sequence.vertex(m.top + m.length - 1)


def syzygy(sequence: AdmissibleSequence, m: UniserialModule) -> UniserialModule:
    """
    Kernel of the projective cover P_a -> M.

    Returns:
        ZERO if M is projective, else M(wrap(a + l), c_a - l).

    Raises:
        ZeroModule: If m is zero.
    """
    _require_nonzero(m)
    c_top = sequence.entry(m.top)
    if m.length == c_top:
        return ZERO
    return UniserialModule(top=sequence.vertex(m.top + m.length), length=c_top - m.length)


def injective_envelope(sequence: AdmissibleSequence, b: int) -> UniserialModule:
    """
    Injective envelope I_b: the longest uniserial module with socle S_b.

    Its length d is the first d >= 1 with c_{wrap(b - d)} <= d. For each
    vertex x the first such d with wrap(b - d) = x has a closed form, so
    d is a minimum over n candidates whatever the size of the entries.

    Raises:
        NotCycleAlgebra: If the sequence is a line sequence.
    """
    _require_cycle(sequence, "injective_envelope")
    b = sequence.vertex(b)
    n = sequence.n
    x = np.arange(1, n + 1, dtype=np.int64)
    c = np.asarray(sequence.c, dtype=np.int64)
    first = (b - x - 1) % n + 1
    laps = np.maximum(0, -((first - c) // n))
    d = int((first + n * laps).min())
    return UniserialModule(top=sequence.vertex(b - d + 1), length=d)


def is_injective(sequence: AdmissibleSequence, m: UniserialModule) -> bool:
    _require_nonzero(m)
    return m.length == injective_envelope(sequence, socle(sequence, m)).length


def cosyzygy(sequence: AdmissibleSequence, m: UniserialModule) -> UniserialModule:
    """
    Cokernel of the injective envelope M -> I_{soc M}.

    Returns:
        ZERO if M is injective, else M(wrap(b - d + 1), d - l) where b is
        the socle of M and d the length of I_b.

    Raises:
        NotCycleAlgebra: If the sequence is a line sequence.
        ZeroModule: If m is zero.
    """
    _require_cycle(sequence, "cosyzygy")
    _require_nonzero(m)
    envelope = injective_envelope(sequence, socle(sequence, m))
    if m.length == envelope.length:
        return ZERO
    return UniserialModule(top=envelope.top, length=envelope.length - m.length)


def tau(sequence: AdmissibleSequence, m: UniserialModule) -> UniserialModule:
    """
    Auslander-Reiten translate on a non-projective uniserial: M(wrap(a + 1), l).

    Raises:
        NotCycleAlgebra: If the sequence is a line sequence.
        ZeroModule: If m is zero.
        ProjectiveModule: If m is projective.
    """
    _require_cycle(sequence, "tau")
    _require_nonzero(m)
    if is_projective(sequence, m):
        raise ProjectiveModule(f"tau is undefined on the projective module {m}")
    return UniserialModule(top=sequence.vertex(m.top + 1), length=m.length)


def tau_inv(sequence: AdmissibleSequence, m: UniserialModule) -> UniserialModule:
    """
    Inverse translate on a non-injective uniserial: M(wrap(a - 1), l).

    Raises:
        NotCycleAlgebra: If the sequence is a line sequence.
        ZeroModule: If m is zero.
        InjectiveModule: If m is injective.
    """
    _require_cycle(sequence, "tau_inv")
    _require_nonzero(m)
    if is_injective(sequence, m):
        raise InjectiveModule(f"tau inverse is undefined on the injective module {m}")
    return UniserialModule(top=sequence.vertex(m.top - 1), length=m.length)


def gamma(sequence: AdmissibleSequence, i: int) -> int:
    """
    gamma(S_i) = tau soc P_i, returned as a vertex index.

    Equals wrap(i + c_i) for every cycle algebra.

    Raises:
        NotCycleAlgebra: If the sequence is a line sequence.
    """
    _require_cycle(sequence, "gamma")
    socle_simple = simple(sequence, socle(sequence, proj_cover(sequence, i)))
    return tau(sequence, socle_simple).top
