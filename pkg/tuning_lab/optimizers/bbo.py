"""Biogeography-based optimization.

Habitats are kept sorted best-first, so habitat i (0-based) has rank
i + 1, immigration rate lambda = (i + 1)/(P + 1) and emigration rate
mu = 1 - lambda. Good habitats share their species, poor ones take them.
"""

import numpy as np
import numpy.typing as npt

from .base import BaseOptimizer
from .evaluator import Evaluator, round_half_up
from .protocols import BboConfig, Population


def migration_rates(
    size: int,
) -> tuple[npt.NDArray[np.float64], npt.NDArray[np.float64]]:
    """Immigration (lambda) and emigration (mu) rates by rank, best first."""
    immigration = np.arange(1, size + 1, dtype=np.float64) / (size + 1)
    return immigration, 1.0 - immigration


def migrate(
    species_i: float | npt.NDArray[np.float64],
    species_j: float | npt.NDArray[np.float64],
    alpha: float,
) -> float | npt.NDArray[np.float64]:
    """Blend a species toward the source habitat's species."""
    return (1.0 - alpha) * species_i + alpha * species_j


def mutation_sigma(
    config: BboConfig, ranges: npt.NDArray[np.float64], iteration: int
) -> npt.NDArray[np.float64]:
    """Per-gene mutation step after ``iteration`` damping steps."""
    return (
        config.mut_step_size
        * ranges
        * config.mut_step_size_damp**iteration
    )


def sort_habitats(habitats: Population) -> Population:
    """Order habitats best-first (stable on ties)."""
    order = np.argsort(habitats.fitness, kind="stable")
    return Population(
        genotypes=habitats.genotypes[order],
        fitness=habitats.fitness[order],
    )


def bbo_step(
    habitats: Population,
    config: BboConfig,
    evaluator: Evaluator,
    rng: np.random.Generator,
    iteration: int = 0,
) -> Population:
    """Migrate, mutate and merge with the previous habitats.

    Args:
        habitats: Evaluated habitats sorted best-first
        config: Method configuration
        evaluator: Counting evaluator
        rng: Random stream
        iteration: Damping exponent of the mutation step (0 first)

    Returns:
        Next habitats sorted best-first
    """
    originals = habitats.genotypes
    size, n_vars = originals.shape
    immigration, emigration = migration_rates(size)
    sigma = mutation_sigma(
        config, evaluator.spec.space.index_ranges, iteration
    )

    cumulative = []
    for i in range(size):
        weights = emigration.copy()
        weights[i] = 0.0
        cumulative.append(np.cumsum(weights))

    genes = np.arange(n_vars)
    transformed = originals.copy()
    for i in range(size):
        migrating = rng.random(n_vars) < immigration[i]
        wheel = cumulative[i]
        sources = np.searchsorted(
            wheel, rng.random(n_vars) * wheel[-1], side="right"
        )
        sources = np.minimum(sources, size - 1)
        blended = migrate(
            originals[i], originals[sources, genes], config.alpha
        )
        transformed[i, migrating] = blended[migrating]

        mutating = rng.random(n_vars) < config.mut_prob
        steps = sigma * rng.standard_normal(n_vars)
        transformed[i, mutating] += steps[mutating]

    new = sort_habitats(
        Population(
            genotypes=transformed, fitness=evaluator.evaluate(transformed)
        )
    )
    n_keep = min(round_half_up(config.keep_rate * size), size)
    merged = Population(
        genotypes=np.concatenate(
            [originals[:n_keep], new.genotypes[: size - n_keep]]
        ),
        fitness=np.concatenate(
            [habitats.fitness[:n_keep], new.fitness[: size - n_keep]]
        ),
    )
    return sort_habitats(merged)


class Bbo(BaseOptimizer):
    """BBO with roulette source selection and elitist survivor merge."""

    config: BboConfig

    def initialize(
        self, evaluator: Evaluator, rng: np.random.Generator
    ) -> Population:
        return sort_habitats(self.random_population(evaluator, rng))

    def step(
        self,
        population: Population,
        evaluator: Evaluator,
        rng: np.random.Generator,
        iteration: int,
        budget: int,
    ) -> Population:
        return bbo_step(
            population, self.config, evaluator, rng, iteration - 1
        )

    def expected_evaluations(self, budget: int) -> int:
        return self.config.pop_size * (budget + 1)
