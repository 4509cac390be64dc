"""
Unit tests for projective, injective and global dimensions.

The worked examples are cross-checked against a brute-force engine that
represents a uniserial module by its list of composition factors and
builds projective covers and injective envelopes from the factor lists.
"""

import sys
import os
from typing import List, Optional, Tuple

import pytest

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../src")))

from algebra import NotCycleAlgebra, validate
from modules import (
    INFINITE,
    HomDim,
    ZERO,
    ZeroModule,
    global_dim,
    inj_dim,
    proj_dim,
    simple,
    simple_inj_dims,
    simple_proj_dims,
)
from verify import enumerate_admissible


def _factors(c: Tuple[int, ...], top: int, length: int) -> List[int]:
    n = len(c)
    return [(top - 1 + k) % n + 1 for k in range(length)]


def _brute_pd(c: Tuple[int, ...], i: int) -> Optional[int]:
    """pd S_i by taking kernels of factor lists; None when a state repeats."""
    factors = [i]
    seen = set()
    steps = 0
    while True:
        projective = _factors(c, factors[0], c[factors[0] - 1])
        if factors == projective:
            return steps
        if tuple(factors) in seen:
            return None
        seen.add(tuple(factors))
        factors = projective[len(factors):]
        steps += 1


def _brute_id(c: Tuple[int, ...], i: int) -> Optional[int]:
    """id S_i by taking cokernels into the longest module with the same socle."""
    n = len(c)

    def envelope(socle_vertex: int) -> List[int]:
        best = [socle_vertex]
        for top in range(1, n + 1):
            for length in range(1, c[top - 1] + 1):
                candidate = _factors(c, top, length)
                if candidate[-1] == socle_vertex and len(candidate) > len(best):
                    best = candidate
        return best

    factors = [i]
    seen = set()
    steps = 0
    while True:
        injective = envelope(factors[-1])
        if factors == injective:
            return steps
        if tuple(factors) in seen:
            return None
        seen.add(tuple(factors))
        factors = injective[:len(injective) - len(factors)]
        steps += 1


def _values(dims: List[HomDim]) -> List[Optional[int]]:
    return [d.value for d in dims]


class TestHomDim:
    """Tests for the HomDim value type."""

    def test_infinite(self):
        """Test the JSON and text forms of an infinite dimension."""
        assert INFINITE.is_infinite
        assert INFINITE.to_json() == "inf"
        assert str(INFINITE) == "inf"

    def test_finite(self):
        """Test that finite dimensions serialize as integers."""
        assert HomDim(3).to_json() == 3
        assert not HomDim(0).is_infinite


class TestProjectiveDimension:
    """Tests for proj_dim() and global_dim()."""

    def test_line_algebra(self):
        """Test projective dimensions of the simples over (2,2,1)."""
        line = validate([2, 2, 1])
        assert _values(simple_proj_dims(line)) == [2, 1, 0]
        assert global_dim(line) == HomDim(2)

    def test_two_two_is_infinite(self):
        """Test that (2,2) has infinite global dimension."""
        assert simple_proj_dims(validate([2, 2])) == [INFINITE, INFINITE]
        assert global_dim(validate([2, 2])).is_infinite

    def test_three_three_four_state_orbit(self):
        """Test that a syzygy orbit revisiting a state gives infinite dimension."""
        assert simple_proj_dims(validate([3, 3])) == [INFINITE, INFINITE]

    def test_finite_cycle_algebra(self):
        """Test that (3,3,3,4) has finite global dimension 5."""
        sequence = validate([3, 3, 3, 4])
        assert _values(simple_proj_dims(sequence)) == [3, 5, 4, 1]
        assert global_dim(sequence) == HomDim(5)

    def test_zero_module(self):
        """Test that the zero module has no projective dimension."""
        with pytest.raises(ZeroModule):
            proj_dim(validate([2, 2]), ZERO)

    def test_huge_local_algebra(self):
        """Test that dimensions over (20000000) come back without scanning every length."""
        sequence = validate([20000000])
        assert simple_proj_dims(sequence) == [INFINITE]
        assert simple_inj_dims(sequence) == [INFINITE]

    def test_line_global_dimension_finite_over_enumeration(self):
        """Test that every enumerated line algebra has global dimension at most n - 1."""
        lines = [s for s in enumerate_admissible(6, 7) if not s.is_cycle]
        assert lines
        for sequence in lines:
            dimension = global_dim(sequence)
            assert not dimension.is_infinite
            assert dimension.value <= sequence.n - 1


class TestInjectiveDimension:
    """Tests for inj_dim()."""

    def test_mixed_table(self):
        """Test that (3,4) has one finite and one infinite injective dimension."""
        assert _values(simple_inj_dims(validate([3, 4]))) == [1, None]

    def test_two_two(self):
        """Test that both simples over (2,2) have infinite injective dimension."""
        assert simple_inj_dims(validate([2, 2])) == [INFINITE, INFINITE]

    def test_line_rejected(self):
        """Test that injective dimension needs a cycle algebra."""
        line = validate([2, 2, 1])
        with pytest.raises(NotCycleAlgebra):
            inj_dim(line, simple(line, 1))


class TestBruteForceAgreement:
    """The orbit engine against the factor-list engine."""

    @pytest.mark.parametrize("entries", [
        [2, 2, 1], [2, 2], [3, 3], [3, 3, 3, 4], [3, 4], [3, 3, 4], [4, 4, 5, 5, 5], [3, 2, 1],
    ])
    def test_projective_dimensions(self, entries):
        """Test that projective dimensions match the factor-list engine."""
        sequence = validate(entries)
        expected = [_brute_pd(sequence.c, i) for i in range(1, sequence.n + 1)]
        assert _values(simple_proj_dims(sequence)) == expected

    @pytest.mark.parametrize("entries", [[2, 2], [3, 3], [3, 3, 3, 4], [3, 4], [3, 3, 4], [4, 4, 5, 5, 5]])
    def test_injective_dimensions(self, entries):
        """Test that injective dimensions match the factor-list engine."""
        sequence = validate(entries)
        expected = [_brute_id(sequence.c, i) for i in range(1, sequence.n + 1)]
        assert _values(simple_inj_dims(sequence)) == expected
