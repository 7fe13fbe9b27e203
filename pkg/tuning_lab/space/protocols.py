"""Domain types of the discrete search space."""

import itertools
import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from ..exceptions import SpaceError

Genotype = npt.NDArray[np.float64]
IndexVector = tuple[int, ...]

MAX_CARDINALITY = 2**63 - 1


@dataclass(frozen=True)
class ValueGrid:
    """Ordered finite set of values one variable can take.

    Attributes:
        values: Strictly increasing candidate values (m_j of them)
    """

    values: tuple[float, ...]

    def __post_init__(self) -> None:
        values = tuple(float(v) for v in self.values)
        object.__setattr__(self, "values", values)

        if len(values) < 2:
            raise SpaceError(
                f"a value grid needs at least 2 values, got {len(values)}"
            )
        if not all(math.isfinite(v) for v in values):
            raise SpaceError("grid values must be finite")
        if any(b <= a for a, b in zip(values, values[1:])):
            raise SpaceError("grid values must be strictly increasing")

    @classmethod
    def linear(cls, lower: float, upper: float, count: int) -> "ValueGrid":
        """Build an evenly spaced grid including both endpoints.

        Args:
            lower: First value
            upper: Last value
            count: Number of values (m_j >= 2)

        Returns:
            Grid with values lower + k*(upper-lower)/(count-1)

        Raises:
            SpaceError: If count < 2 or upper <= lower
        """
        if count < 2:
            raise SpaceError(f"count must be >= 2, got {count}")
        if not upper > lower:
            raise SpaceError(
                f"upper ({upper}) must be greater than lower ({lower})"
            )

        span = upper - lower
        values = [lower + k * span / (count - 1) for k in range(count - 1)]
        values.append(upper)
        return cls(values=tuple(values))

    @classmethod
    def explicit(cls, values: Sequence[float]) -> "ValueGrid":
        """Build a grid from an explicit value list."""
        return cls(values=tuple(values))

    @property
    def lower(self) -> float:
        return self.values[0]

    @property
    def upper(self) -> float:
        return self.values[-1]

    @property
    def count(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class DiscreteSpace:
    """Cartesian product of per-variable value grids.

    Attributes:
        grids: One grid per decision variable, in variable order
    """

    grids: tuple[ValueGrid, ...]

    def __post_init__(self) -> None:
        grids = tuple(self.grids)
        object.__setattr__(self, "grids", grids)
        if not grids:
            raise SpaceError("a space needs at least one variable")
        total = math.prod(grid.count for grid in grids)
        if total > MAX_CARDINALITY:
            raise SpaceError(
                f"space cardinality {total} exceeds the representable "
                f"maximum {MAX_CARDINALITY}"
            )

    @classmethod
    def uniform(
        cls, dimensions: int, lower: float, upper: float, count: int
    ) -> "DiscreteSpace":
        """Build a space whose variables all share one linear grid.

        Args:
            dimensions: Number of variables
            lower: Lower bound of every variable
            upper: Upper bound of every variable
            count: Values per variable

        Returns:
            Homogeneous discrete space
        """
        if dimensions < 1:
            raise SpaceError(f"dimensions must be >= 1, got {dimensions}")
        grid = ValueGrid.linear(lower, upper, count)
        return cls(grids=(grid,) * dimensions)

    @property
    def n_vars(self) -> int:
        return len(self.grids)

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(grid.count for grid in self.grids)

    @property
    def index_ranges(self) -> npt.NDArray[np.float64]:
        """Index-space range m_j - 1 of every variable."""
        return np.array([c - 1 for c in self.counts], dtype=np.float64)

    def iter_indices(self) -> Iterator[IndexVector]:
        """Enumerate every index vector in lexicographic order."""
        return itertools.product(*(range(c) for c in self.counts))

    def contains(self, indices: Sequence[int]) -> bool:
        """Check that an index vector lies within the grid bounds."""
        if len(indices) != self.n_vars:
            return False
        return all(0 <= i < c for i, c in zip(indices, self.counts))
