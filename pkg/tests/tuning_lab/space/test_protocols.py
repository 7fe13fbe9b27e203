"""Tests for value grids and discrete spaces."""

import pytest

from tuning_lab.exceptions import SpaceError
from tuning_lab.space import DiscreteSpace, ValueGrid


class TestValueGrid:
    """Test ValueGrid."""

    def test_linear_includes_endpoints(self):
        """Test linear grid spans lower to upper inclusive."""
        grid = ValueGrid.linear(0.0, 1.0, 5)

        assert grid.values == (0.0, 0.25, 0.5, 0.75, 1.0)
        assert grid.lower == 0.0
        assert grid.upper == 1.0
        assert grid.count == 5

    def test_linear_last_value_is_exact_upper(self):
        """Test the last value is exactly the upper bound."""
        grid = ValueGrid.linear(-512.0, 512.0, 7)

        assert grid.values[-1] == 512.0

    def test_explicit_converts_to_float(self):
        """Test explicit values are stored as floats."""
        grid = ValueGrid.explicit([1, 2, 4])

        assert grid.values == (1.0, 2.0, 4.0)
        assert all(isinstance(v, float) for v in grid.values)

    @pytest.mark.parametrize(
        "values",
        [(1.0,), (1.0, 1.0), (2.0, 1.0), (0.0, float("nan"))],
    )
    def test_invalid_values(self, values):
        """Test grids need >= 2 finite strictly increasing values."""
        with pytest.raises(SpaceError):
            ValueGrid.explicit(values)

    def test_linear_invalid_count(self):
        """Test linear grid rejects count < 2."""
        with pytest.raises(SpaceError, match="count"):
            ValueGrid.linear(0.0, 1.0, 1)

    def test_linear_invalid_bounds(self):
        """Test linear grid rejects upper <= lower."""
        with pytest.raises(SpaceError, match="greater"):
            ValueGrid.linear(1.0, 1.0, 3)


class TestDiscreteSpace:
    """Test DiscreteSpace."""

    def test_uniform(self):
        """Test homogeneous space shares one grid."""
        space = DiscreteSpace.uniform(3, -1.0, 1.0, 4)

        assert space.n_vars == 3
        assert space.counts == (4, 4, 4)
        assert list(space.index_ranges) == [3.0, 3.0, 3.0]

    def test_uniform_needs_dimensions(self):
        """Test a space without variables is rejected."""
        with pytest.raises(SpaceError):
            DiscreteSpace.uniform(0, 0.0, 1.0, 2)

    def test_empty_space(self):
        """Test an empty grid tuple is rejected."""
        with pytest.raises(SpaceError):
            DiscreteSpace(grids=())

    def test_cardinality_overflow(self):
        """Test spaces beyond the signed 64-bit range are rejected."""
        with pytest.raises(SpaceError, match="representable"):
            DiscreteSpace.uniform(16, -5.0, 5.0, 16)

    def test_largest_representable(self):
        """Test 2**62 solutions still fit."""
        space = DiscreteSpace.uniform(62, 0.0, 1.0, 2)

        assert space.n_vars == 62

    def test_iter_indices_lexicographic(self):
        """Test enumeration order is lexicographic."""
        space = DiscreteSpace(
            grids=(ValueGrid.explicit((0, 1)), ValueGrid.explicit((0, 1, 2)))
        )

        assert list(space.iter_indices()) == [
            (0, 0),
            (0, 1),
            (0, 2),
            (1, 0),
            (1, 1),
            (1, 2),
        ]

    def test_contains(self):
        """Test bounds and arity checks."""
        space = DiscreteSpace.uniform(2, 0.0, 1.0, 3)

        assert space.contains((0, 2))
        assert not space.contains((0, 3))
        assert not space.contains((-1, 0))
        assert not space.contains((0,))
