"""Counting, best-tracking wrapper around an objective."""

import logging

import numpy as np
import numpy.typing as npt

from ..objectives import ObjectiveSpec, evaluate_many
from ..space import IndexVector, snap_many

logger = logging.getLogger(__name__)


def make_rng(seed: int) -> np.random.Generator:
    """Create the counter-based random stream of one run."""
    return np.random.Generator(np.random.Philox(seed))


def round_half_up(value: float) -> int:
    """Round to the nearest integer, halves toward +inf."""
    return int(np.floor(value + 0.5))


class Evaluator:
    """Evaluates genotypes on the snapped grid.

    Every objective evaluation passes through here so the counter stays
    exact. The best-so-far solution only changes on strict improvement,
    so among equal fitness the earliest evaluated solution is kept.

    Attributes:
        spec: Objective being optimized
        evaluations: Objective evaluations spent so far
        best_fitness: Best fitness seen so far
        best_solution: Index vector of best_fitness
    """

    def __init__(self, spec: ObjectiveSpec):
        self.spec = spec
        self.evaluations = 0
        self.best_fitness = float("inf")
        self.best_solution: IndexVector | None = None

    def evaluate(
        self, genotypes: npt.NDArray[np.float64]
    ) -> npt.NDArray[np.float64]:
        """Evaluate a matrix of genotypes (one per row).

        Args:
            genotypes: Genotypes in index coordinates

        Returns:
            Fitness per row
        """
        genotypes = np.atleast_2d(np.asarray(genotypes, dtype=np.float64))
        if genotypes.shape[0] == 0:
            return np.empty(0, dtype=np.float64)

        indices = snap_many(genotypes, self.spec.space)
        fitness = evaluate_many(self.spec, indices)
        self.evaluations += len(fitness)

        pos = int(np.argmin(fitness))
        if fitness[pos] < self.best_fitness:
            self.best_fitness = float(fitness[pos])
            self.best_solution = tuple(int(i) for i in indices[pos])
        return fitness
