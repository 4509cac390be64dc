"""
Unit tests for retraction chains and the self-injective closed form.
"""

import sys
import os
from math import gcd

import pytest

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../src")))

from algebra import NotCycleAlgebra, validate
from quiver import decompose, f_map
from retraction import (
    CycleSummary,
    StepKind,
    chain_cycle_summary,
    retraction_chain,
    selfinjective_cycle_data,
    unlifted_chain,
)


class TestClosedForm:
    """Tests for selfinjective_cycle_data()."""

    def test_examples(self):
        """Test the closed form on a few self-injective sequences."""
        assert selfinjective_cycle_data(6, 4) == CycleSummary(2, 3, 2)
        assert selfinjective_cycle_data(2, 2) == CycleSummary(2, 1, 1)
        assert selfinjective_cycle_data(1, 2) == CycleSummary(1, 1, 2)

    def test_rejects_non_sequences(self):
        """Test that the closed form rejects entries below 2 and empty sequences."""
        with pytest.raises(ValueError):
            selfinjective_cycle_data(3, 1)
        with pytest.raises(ValueError):
            selfinjective_cycle_data(0, 3)

    def test_matches_direct_decomposition(self):
        """Test that the closed form matches decomposing R(A) for n, c up to 30."""
        for c in range(2, 31):
            for n in range(1, 31):
                divisor = gcd(n, c)
                parts = decompose(f_map(validate([c] * n)))
                assert len(parts.cycles) == divisor
                assert {(cycle.size, cycle.weight) for cycle in parts.cycles} == {
                    (n // divisor, c // divisor)
                }
                assert selfinjective_cycle_data(n, c) == CycleSummary(divisor, n // divisor, c // divisor)


class TestRetractionChain:
    """Tests for retraction_chain()."""

    def test_small_p_lifts_first(self):
        """Test that a sequence with p <= n is lifted before retracting."""
        chain = retraction_chain(validate([2, 3]))
        assert [step.kind for step in chain.steps] == [StepKind.LIFT, StepKind.RETRACT]
        assert chain.steps[0].result.c == (4, 5)
        assert chain.terminal.c == (2,)
        assert chain.lift_multiple == 1

    def test_self_injective_without_lift_is_empty(self):
        """Test that a self-injective sequence with p > n has an empty chain."""
        chain = retraction_chain(validate([4, 4]))
        assert chain.steps == ()
        assert chain.terminal.c == (4, 4)
        assert chain.lift_multiple == 0

    def test_self_injective_with_small_p_only_lifts(self):
        """Test that a self-injective sequence with small p is only lifted."""
        chain = retraction_chain(validate([2, 2]))
        assert [step.kind for step in chain.steps] == [StepKind.LIFT]
        assert chain.terminal.c == (4, 4)

    def test_four_vertices(self):
        """Test every stage of the chain for (3,3,3,4)."""
        chain = retraction_chain(validate([3, 3, 3, 4]))
        assert [stage.c for stage in chain.stages()] == [
            (3, 3, 3, 4), (7, 7, 7, 8), (6, 5, 5), (5, 5, 6), (4, 3), (3, 4), (2,),
        ]
        assert chain.retract_count == 3
        assert [step.amount for step in chain.steps if step.kind is StepKind.ROTATE] == [1, 1]

    def test_every_stage_has_p_above_n(self):
        """Test that every stage after the lift has p greater than n."""
        chain = retraction_chain(validate([3, 3, 4]))
        for stage in chain.stages()[1:]:
            assert stage.is_cycle
            assert stage.p > stage.n

    def test_to_dict(self):
        """Test the dictionary form of a chain."""
        data = retraction_chain(validate([2, 3])).to_dict()
        assert data == {
            "start": [2, 3],
            "lift_multiple": 1,
            "steps": [
                {"kind": "lift", "amount": 1, "input": [2, 3], "output": [4, 5]},
                {"kind": "retract", "amount": None, "input": [4, 5], "output": [2]},
            ],
            "terminal": [2],
        }

    def test_step_str(self):
        """Test the text form of a chain step."""
        step = retraction_chain(validate([2, 3])).steps[0]
        assert str(step) == "Lift(1): (2,3) -> (4,5)"

    def test_line_rejected(self):
        """Test that retraction chains need a cycle algebra."""
        with pytest.raises(NotCycleAlgebra):
            retraction_chain(validate([2, 2, 1]))


class TestChainCycleSummary:
    """Tests for chain_cycle_summary()."""

    @pytest.mark.parametrize("entries, expected", [
        ([2, 3], CycleSummary(1, 1, 1)),
        ([3, 3], CycleSummary(1, 2, 3)),
        ([4, 4], CycleSummary(2, 1, 2)),
        ([2, 2], CycleSummary(2, 1, 1)),
        ([3, 3, 3, 4], CycleSummary(1, 1, 1)),
        ([3, 3, 4], CycleSummary(2, 1, 1)),
    ])
    def test_examples(self, entries, expected):
        """Test the chain summary on worked examples."""
        assert chain_cycle_summary(validate(entries)) == expected

    def test_to_dict(self):
        """Test the dictionary form of a cycle summary."""
        assert chain_cycle_summary(validate([3, 3])).to_dict() == {"count": 1, "size": 2, "weight": 3}


class TestUnliftedChain:
    """Tests for unlifted_chain()."""

    def test_infinite_global_dimension(self):
        """Test that the unlifted chain of (3,4) ends at (2) without a lift."""
        chain = unlifted_chain(validate([3, 4]))
        assert chain.terminal.c == (2,)
        assert chain.lift_multiple == 0

    def test_may_end_on_line(self):
        """Test that the unlifted chain may end on a line algebra."""
        chain = unlifted_chain(validate([2, 3]))
        assert chain.terminal.c == (1,)
        assert not chain.terminal.is_cycle

    def test_self_injective_is_terminal(self):
        """Test that a self-injective sequence has an empty unlifted chain."""
        assert unlifted_chain(validate([3, 3])).steps == ()
