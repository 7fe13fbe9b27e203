"""Mapping between real-coded genotypes and discrete solutions.

All optimizers search in index coordinates: coordinate j of a genotype
ranges over [0, m_j - 1] of variable j. A genotype is turned into a
concrete solution by rounding half-up and clamping to the grid, and a
solution is turned into physical values by grid lookup.
"""

import math
from collections.abc import Sequence

import numpy as np
import numpy.typing as npt

from ..exceptions import SpaceError
from .protocols import DiscreteSpace, Genotype, IndexVector


def cardinality(space: DiscreteSpace) -> int:
    """Count the solutions of a space.

    Args:
        space: Discrete space

    Returns:
        Product of the per-variable value counts (bounded at construction)
    """
    return math.prod(space.counts)


def snap_many(
    genotypes: npt.NDArray[np.float64], space: DiscreteSpace
) -> npt.NDArray[np.int64]:
    """Snap a matrix of genotypes (one per row) to index vectors."""
    upper = space.index_ranges
    rounded = np.floor(np.asarray(genotypes, dtype=np.float64) + 0.5)
    return np.clip(rounded, 0.0, upper).astype(np.int64)


def snap(genotype: Genotype, space: DiscreteSpace) -> IndexVector:
    """Snap a genotype to the nearest grid point.

    Each coordinate is rounded half-up (ties toward +inf) and then
    clamped to [0, m_j - 1].

    Args:
        genotype: Real coordinates in index space
        space: Discrete space

    Returns:
        Index vector of the snapped solution
    """
    row = snap_many(np.atleast_2d(genotype), space)[0]
    return tuple(int(i) for i in row)


def embed(indices: Sequence[int]) -> Genotype:
    """Express an index vector as a genotype."""
    return np.asarray(indices, dtype=np.float64)


def decode(indices: Sequence[int], space: DiscreteSpace) -> list[float]:
    """Look up the physical values of an index vector.

    Args:
        indices: Index vector
        space: Discrete space

    Returns:
        values[idx_j] for every variable j

    Raises:
        SpaceError: If any index is outside its grid
    """
    if not space.contains(indices):
        raise SpaceError(
            f"index vector {tuple(indices)} is outside the space with "
            f"counts {space.counts}"
        )
    return [grid.values[i] for grid, i in zip(space.grids, indices)]


def decode_many(
    indices: npt.NDArray[np.int64], space: DiscreteSpace
) -> npt.NDArray[np.float64]:
    """Decode a matrix of in-range index vectors (one per row)."""
    indices = np.atleast_2d(indices)
    columns = [
        np.asarray(grid.values, dtype=np.float64)[indices[:, j]]
        for j, grid in enumerate(space.grids)
    ]
    return np.stack(columns, axis=1)


def random_genotype(
    space: DiscreteSpace, rng: np.random.Generator
) -> Genotype:
    """Draw a genotype uniformly from the index box of the space.

    Args:
        space: Discrete space
        rng: Generator advanced by one uniform draw per variable

    Returns:
        Genotype with coordinate j in [0, m_j - 1]
    """
    return rng.uniform(0.0, space.index_ranges)
