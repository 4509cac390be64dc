"""
Unit tests for admissible sequences: validation, parsing and transforms.
"""

import sys
import os
import pytest

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../src")))

from algebra import (
    AlgebraKind,
    EmptySequence,
    LineEntryTooSmall,
    MixedKind,
    NonIntegerEntry,
    NonPositiveEntry,
    NotCycleAlgebra,
    SequenceParseError,
    ViolatesFactorCondition,
    is_normalized,
    lift,
    p_min,
    parse_sequence,
    render,
    rotate,
    validate,
    wrap,
)
from verify import enumerate_admissible


class TestWrap:
    """Tests for the 1-based modular reduction."""

    def test_in_range_is_unchanged(self):
        """Test that vertices already in 1..n are left alone."""
        assert [wrap(x, 4) for x in range(1, 5)] == [1, 2, 3, 4]

    def test_wraps_above_and_below(self):
        """Test that integers outside 1..n wrap around in both directions."""
        assert wrap(5, 4) == 1
        assert wrap(8, 4) == 4
        assert wrap(0, 4) == 4
        assert wrap(-1, 2) == 1


class TestValidate:
    """Tests for validate()."""

    def test_cycle_not_self_injective(self):
        """Test that (3,3,3,4) is a cycle sequence that is not self-injective."""
        sequence = validate([3, 3, 3, 4])
        assert sequence.kind is AlgebraKind.CYCLE
        assert sequence.self_injective is False
        assert sequence.n == 4

    def test_line(self):
        """Test that a sequence ending in 1 is classified as a line."""
        sequence = validate([2, 2, 1])
        assert sequence.kind is AlgebraKind.LINE
        assert not sequence.is_cycle
        assert sequence.self_injective is False

    def test_constant_cycle_is_self_injective(self):
        """Test that a constant cycle sequence is self-injective."""
        sequence = validate([4, 4])
        assert sequence.kind is AlgebraKind.CYCLE
        assert sequence.self_injective is True

    def test_semisimple_point_is_self_injective_line(self):
        """Test that (1) is a self-injective line sequence."""
        sequence = validate([1])
        assert sequence.kind is AlgebraKind.LINE
        assert sequence.self_injective is True

    def test_local_algebra_is_cycle(self):
        """Test that a single entry above 1 is a self-injective cycle."""
        sequence = validate([5])
        assert sequence.kind is AlgebraKind.CYCLE
        assert sequence.self_injective is True

    def test_empty(self):
        """Test that an empty sequence is rejected."""
        with pytest.raises(EmptySequence):
            validate([])

    def test_non_positive_entry(self):
        """Test that a zero entry is reported with its index and value."""
        with pytest.raises(NonPositiveEntry) as info:
            validate([2, 0, 2])
        assert info.value.index == 2
        assert info.value.value == 0

    def test_fractional_entries_are_not_truncated(self):
        """Test that fractional floats raise instead of truncating to (2,3)."""
        with pytest.raises(NonIntegerEntry) as info:
            validate([2.7, 3.2])
        assert info.value.index == 1
        assert info.value.value == 2.7

    def test_integral_floats_are_accepted(self):
        """Test that floats with an integral value are taken as integers."""
        sequence = validate([2.0, 2])
        assert sequence.c == (2, 2)
        assert all(type(value) is int for value in sequence.c)

    @pytest.mark.parametrize("raw", [[True], [2, "3"], [2, None]])
    def test_non_numbers_rejected(self, raw):
        """Test that booleans, strings and None are not accepted as entries."""
        with pytest.raises(NonIntegerEntry):
            validate(raw)

    def test_factor_condition_reported_at_first_drop(self):
        """Test that the factor condition is reported at the first drop."""
        with pytest.raises(ViolatesFactorCondition) as info:
            validate([3, 1, 2])
        assert info.value.index == 1

    def test_cyclic_closure_reported_at_n(self):
        """Test that a failing cyclic closure is reported at index n."""
        # c_1 = 2 < c_3 - 1 = 3 only fails when wrapping around
        with pytest.raises(ViolatesFactorCondition) as info:
            validate([2, 3, 4])
        assert info.value.index == 3

    def test_line_with_early_one(self):
        """Test that a line sequence may only end in 1."""
        with pytest.raises(LineEntryTooSmall):
            validate([1, 1])

    def test_mixed_kind(self):
        """Test that an inner 1 in a sequence not ending in 1 is rejected."""
        with pytest.raises(MixedKind) as info:
            validate([2, 1, 2])
        assert info.value.index == 2

    def test_errors_are_value_errors(self):
        """Test that admissibility errors are ValueErrors."""
        with pytest.raises(ValueError):
            validate([0])
        with pytest.raises(ValueError):
            validate([1.5])

    def test_entry_wraps_for_cycles_only(self):
        """Test that entry() wraps for cycles and range-checks lines."""
        cycle = validate([3, 4])
        assert cycle.entry(3) == 3
        assert cycle.entry(0) == 4
        line = validate([2, 1])
        with pytest.raises(IndexError):
            line.entry(3)


class TestParseAndRender:
    """Tests for the shared text grammar."""

    def test_parse_with_whitespace(self):
        """Test that whitespace around entries is ignored."""
        assert parse_sequence(" 3, 3 ,3,4 ").c == (3, 3, 3, 4)

    def test_render(self):
        """Test that render() and str() give the comma-separated form."""
        assert render(validate([3, 3, 3, 4])) == "3,3,3,4"
        assert str(validate([2, 2, 1])) == "2,2,1"

    @pytest.mark.parametrize("text", ["", "3;4", "3,,4", "a,b", "3,4,", "2.5,3"])
    def test_malformed_text(self, text):
        """Test that text outside the grammar raises SequenceParseError."""
        with pytest.raises(SequenceParseError):
            parse_sequence(text)

    def test_parse_validates(self):
        """Test that parsed entries go through admissibility checks."""
        with pytest.raises(ViolatesFactorCondition):
            parse_sequence("3,1,2")

    def test_render_parse_round_trip_over_enumeration(self):
        """Test that parsing the rendered text gives back every enumerated sequence."""
        for sequence in enumerate_admissible(5, 8):
            assert parse_sequence(render(sequence)) == sequence
            assert validate(list(sequence.c)) == sequence


class TestMinimumAndNormalization:
    """Tests for p_min() and is_normalized()."""

    def test_p_min(self):
        """Test that p_min() is the smallest entry."""
        assert p_min(validate([3, 3, 3, 4])) == 3
        assert p_min(validate([2, 3])) == 2
        assert validate([5, 5, 5]).p == 5

    def test_is_normalized(self):
        """Test that only p = c_1 = c_n - 1 cycle sequences are normalized."""
        assert is_normalized(validate([3, 3, 3, 4]))
        assert is_normalized(validate([2, 3]))
        assert not is_normalized(validate([3, 4, 3, 3]))
        assert not is_normalized(validate([4, 4]))
        assert not is_normalized(validate([2, 2, 1]))


class TestRotateAndLift:
    """Tests for rotate() and lift()."""

    def test_rotate(self):
        """Test that rotate() shifts the entries to the left by r."""
        assert rotate(validate([3, 4, 3, 3]), 2).c == (3, 3, 3, 4)
        assert rotate(validate([3, 3, 3, 4]), 0).c == (3, 3, 3, 4)
        assert rotate(validate([2, 3]), 1).c == (3, 2)

    def test_rotate_reduces_amount(self):
        """Test that the rotation amount is taken modulo n."""
        assert rotate(validate([2, 3]), 3).c == (3, 2)
        assert rotate(validate([2, 3]), -1).c == (3, 2)

    def test_rotate_rejects_line(self):
        """Test that rotating a line sequence raises NotCycleAlgebra."""
        with pytest.raises(NotCycleAlgebra):
            rotate(validate([2, 1]), 1)

    def test_rotations_compose_to_identity_over_enumeration(self):
        """Test that rotating by r and then by n - r restores every cycle sequence."""
        for sequence in enumerate_admissible(5, 8):
            if not sequence.is_cycle:
                continue
            for r in range(sequence.n + 1):
                assert rotate(rotate(sequence, r), sequence.n - r) == sequence

    def test_lift(self):
        """Test that lift() adds t*n to every entry."""
        assert lift(validate([2, 3]), 1).c == (4, 5)
        assert lift(validate([3, 3, 3, 4]), 0).c == (3, 3, 3, 4)
        assert lift(validate([2, 2]), 2).c == (6, 6)

    def test_lift_rejects_negative_and_line(self):
        """Test that lift() rejects negative multiples and line sequences."""
        with pytest.raises(ValueError):
            lift(validate([2, 3]), -1)
        with pytest.raises(NotCycleAlgebra):
            lift(validate([2, 2, 1]), 1)
