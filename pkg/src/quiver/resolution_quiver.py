"""
Resolution Quiver Module.

The resolution quiver R(A) has vertices 1..n and exactly one arrow
i -> f(i) per vertex, where n divides f(i) - (c_i + i). It is a functional
graph: every connected component carries exactly one directed cycle.
"""

from dataclasses import dataclass
from enum import IntEnum
from typing import FrozenSet, List, Optional, Sequence, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from algebra import AdmissibleSequence, NotCycleAlgebra
from modules import gamma

from .errors import NotACycle, WeightMismatch


class _Mark(IntEnum):
    """Visitation state for cycle extraction."""
    WHITE = 0
    GRAY = 1
    BLACK = 2


@dataclass(frozen=True)
class ResolutionQuiver:
    """
    Functional graph of the map f.

    Attributes:
        f: Arrow targets, f[i - 1] is the target of vertex i.
        c: Entries of the generating sequence, or None for a bare table.
    """
    f: Tuple[int, ...]
    c: Optional[Tuple[int, ...]] = None

    @property
    def n(self) -> int:
        """Number of vertices."""
        return len(self.f)

    def target(self, i: int) -> int:
        """Return f(i) for a 1-based vertex i."""
        return self.f[i - 1]

    @classmethod
    def from_table(cls, table: Sequence[int]) -> 'ResolutionQuiver':
        """
        Build a quiver from a bare arrow table.

        Raises:
            ValueError: If some target lies outside 1..n.
        """
        f = tuple(int(x) for x in table)
        n = len(f)
        for i, target in enumerate(f, start=1):
            if not 1 <= target <= n:
                raise ValueError(f"arrow {i} -> {target} leaves the vertex set 1..{n}")
        return cls(f=f)


@dataclass(frozen=True)
class Cycle:
    """
    A directed cycle in canonical form (starting at its smallest vertex).

    Attributes:
        vertices: (x_1, ..., x_s) with x_{i+1} = f(x_i) and f(x_s) = x_1.
        weight: Sum of c over the cycle divided by n; None for bare tables.
    """
    vertices: Tuple[int, ...]
    weight: Optional[int] = None

    @property
    def size(self) -> int:
        """Number of vertices on the cycle."""
        return len(self.vertices)

    @property
    def is_loop(self) -> bool:
        return self.size == 1


@dataclass(frozen=True)
class ComponentDecomposition:
    """
    Connected components of a resolution quiver and their cycles.

    Component ids are 0-based and follow the order of the cycles, which are
    sorted by their vertex tuples, so cycles[k] is the unique cycle of
    component k.

    Attributes:
        component_of: Component id of vertex i at position i - 1.
        cycles: One cycle per component.
        cyclic_vertices: Vertices lying on some cycle.
    """
    component_of: Tuple[int, ...]
    cycles: Tuple[Cycle, ...]
    cyclic_vertices: FrozenSet[int]

    @property
    def component_count(self) -> int:
        return len(self.cycles)

    def size_weight_pairs(self) -> FrozenSet[Tuple[int, Optional[int]]]:
        """The set of (size, weight) pairs over all cycles."""
        return frozenset((cycle.size, cycle.weight) for cycle in self.cycles)


def f_map(sequence: AdmissibleSequence) -> ResolutionQuiver:
    """
    Build the resolution quiver: f(i) = wrap(c_i + i).

    Defined for line and cycle algebras alike.

    Args:
        sequence: A validated admissible sequence.

    Returns:
        The ResolutionQuiver with its generating entries attached.
    """
    n = sequence.n
    c = np.asarray(sequence.c, dtype=np.int64)
    vertices = np.arange(1, n + 1, dtype=np.int64)
    targets = (c + vertices - 1) % n + 1
    return ResolutionQuiver(f=tuple(int(x) for x in targets), c=sequence.c)


def _component_labels(quiver: ResolutionQuiver) -> np.ndarray:
    """Weak component label of each vertex (scipy numbering)."""
    n = quiver.n
    rows = np.arange(n)
    cols = np.asarray(quiver.f) - 1
    adjacency = csr_matrix((np.ones(n, dtype=np.int8), (rows, cols)), shape=(n, n))
    _, labels = connected_components(adjacency, directed=True, connection='weak')
    return labels


def _raw_cycles(quiver: ResolutionQuiver) -> List[Tuple[int, ...]]:
    """Cycles found by walking f from each unvisited vertex."""
    marks = [_Mark.WHITE] * (quiver.n + 1)
    found: List[Tuple[int, ...]] = []
    for start in range(1, quiver.n + 1):
        if marks[start] is not _Mark.WHITE:
            continue
        path: List[int] = []
        x = start
        while marks[x] is _Mark.WHITE:
            marks[x] = _Mark.GRAY
            path.append(x)
            x = quiver.target(x)
        if marks[x] is _Mark.GRAY:
            found.append(tuple(path[path.index(x):]))
        for vertex in path:
            marks[vertex] = _Mark.BLACK
    return found


def _canonical(vertices: Sequence[int]) -> Tuple[int, ...]:
    """Rotate a cycle so that it starts at its smallest vertex."""
    pivot = vertices.index(min(vertices))
    return tuple(vertices[pivot:]) + tuple(vertices[:pivot])


def _weight(c: Sequence[int], quiver: ResolutionQuiver, vertices: Sequence[int]) -> int:
    n = quiver.n
    total_k = 0
    for x in vertices:
        step = c[x - 1] + x - quiver.target(x)
        if step % n != 0:
            raise WeightMismatch(f"c_{x} + {x} - f({x}) = {step} is not divisible by n = {n}")
        total_k += step // n

    total_c = sum(c[x - 1] for x in vertices)
    if total_c % n != 0 or total_c // n != total_k:
        raise WeightMismatch(
            f"cycle {tuple(vertices)}: sum of c = {total_c} over n = {n} "
            f"disagrees with sum of k = {total_k}"
        )
    return total_k


def decompose(quiver: ResolutionQuiver) -> ComponentDecomposition:
    """
    Split a resolution quiver into components and extract their cycles.

    Args:
        quiver: The functional graph to decompose.

    Returns:
        The decomposition; cycles carry weights when the quiver knows its
        generating sequence.

    Raises:
        WeightMismatch: If the two weight formulas disagree on some cycle.
    """
    labels = _component_labels(quiver)
    cycles = sorted(_canonical(list(raw)) for raw in _raw_cycles(quiver))

    # component k is the one holding the k-th cycle
    relabel = {int(labels[vertices[0] - 1]): k for k, vertices in enumerate(cycles)}
    component_of = tuple(relabel[int(label)] for label in labels)

    cycle_objects: List[Cycle] = []
    for vertices in cycles:
        weight = _weight(quiver.c, quiver, vertices) if quiver.c is not None else None
        cycle_objects.append(Cycle(vertices=vertices, weight=weight))

    cyclic = frozenset(x for vertices in cycles for x in vertices)
    return ComponentDecomposition(
        component_of=component_of,
        cycles=tuple(cycle_objects),
        cyclic_vertices=cyclic,
    )


def cycle_weight(sequence: AdmissibleSequence, vertices: Sequence[int]) -> int:
    """
    Weight of a cycle: sum of k_i with c_{x_i} + x_i = k_i * n + x_{i+1}.

    The result is checked against (sum of c_{x_i}) / n, which must be an
    integer.

    Args:
        sequence: The generating sequence.
        vertices: The cycle (x_1, ..., x_s), in arrow order.

    Returns:
        The weight w(C).

    Raises:
        NotACycle: If the list is empty, repeats a vertex, or is not f-closed.
        WeightMismatch: If the two weight formulas disagree.
    """
    quiver = f_map(sequence)
    xs = [int(x) for x in vertices]
    if not xs or len(set(xs)) != len(xs):
        raise NotACycle(f"{tuple(xs)} is empty or repeats a vertex")
    for position, x in enumerate(xs):
        following = xs[(position + 1) % len(xs)]
        if not 1 <= x <= quiver.n or quiver.target(x) != following:
            raise NotACycle(f"{tuple(xs)} is not a cycle of f = {list(quiver.f)}")
    return _weight(sequence.c, quiver, xs)


def gamma_consistency(sequence: AdmissibleSequence) -> bool:
    """
    Whether gamma(S_i) = tau soc P_i agrees with f(i) at every vertex.

    Raises:
        NotCycleAlgebra: If the sequence is a line sequence.
    """
    if not sequence.is_cycle:
        raise NotCycleAlgebra("gamma is only compared with f for cycle algebras")
    quiver = f_map(sequence)
    return all(gamma(sequence, i) == quiver.target(i) for i in range(1, sequence.n + 1))
