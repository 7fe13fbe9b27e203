"""Elitist genetic algorithm with configurable selection and crossover."""

import numpy as np

from .base import BaseOptimizer
from .crossover import crossover_elitist
from .evaluator import Evaluator, round_half_up
from .protocols import GaElitistConfig, Population
from .selection import select

MUTATION_SCALE_START = 0.1
MUTATION_SCALE_END = 0.01


def offspring_counts(config: GaElitistConfig) -> tuple[int, int, int]:
    """Split a generation into (elite, crossover, mutation) children."""
    size = config.pop_size
    n_elite = min(round_half_up(config.ecount_fract * size), size)
    n_xover = round_half_up(config.cross_fract * (size - n_elite))
    return n_elite, n_xover, size - n_elite - n_xover


def mutation_scale(iteration: int, budget: int) -> float:
    """Gaussian mutation scale, shrinking linearly over the run.

    Args:
        iteration: 1-based iteration number
        budget: Total iterations

    Returns:
        Fraction of the gene range used as standard deviation
    """
    frac = 1.0 if budget <= 1 else (iteration - 1) / (budget - 1)
    return MUTATION_SCALE_START + frac * (
        MUTATION_SCALE_END - MUTATION_SCALE_START
    )


def ga_elitist_step(
    population: Population,
    config: GaElitistConfig,
    evaluator: Evaluator,
    rng: np.random.Generator,
    iteration: int = 1,
    budget: int = 1,
) -> Population:
    """Produce the next generation.

    The elite keep their cached fitness and their population order;
    crossover and mutation children are evaluated.

    Args:
        population: Evaluated population
        config: Method configuration
        evaluator: Counting evaluator
        rng: Random stream
        iteration: 1-based iteration number (mutation schedule)
        budget: Total iterations (mutation schedule)

    Returns:
        Next generation with the elite first
    """
    genotypes, fitness = population.genotypes, population.fitness
    n_elite, n_xover, n_mut = offspring_counts(config)

    order = np.argsort(fitness, kind="stable")
    elite = np.sort(order[:n_elite])

    parents = select(
        fitness,
        config.sel_fn,
        2 * n_xover + n_mut,
        rng,
        tournament_size=config.tournament_size,
    )
    parents = rng.permutation(parents)

    children = []
    for k in range(n_xover):
        a, b = parents[2 * k], parents[2 * k + 1]
        children.append(
            crossover_elitist(
                genotypes[a],
                genotypes[b],
                config.cross_fn,
                rng,
                fitness=(float(fitness[a]), float(fitness[b])),
            )
        )

    sd = mutation_scale(iteration, budget) * evaluator.spec.space.index_ranges
    n_vars = genotypes.shape[1]
    for p in parents[2 * n_xover :]:
        children.append(genotypes[p] + sd * rng.standard_normal(n_vars))

    if children:
        child_genotypes = np.stack(children)
        child_fitness = evaluator.evaluate(child_genotypes)
    else:
        child_genotypes = np.empty((0, n_vars))
        child_fitness = np.empty(0)

    return Population(
        genotypes=np.concatenate([genotypes[elite], child_genotypes]),
        fitness=np.concatenate([fitness[elite], child_fitness]),
    )


class GaElitist(BaseOptimizer):
    """Elitist GA: elite copies, crossover children and Gaussian mutants."""

    config: GaElitistConfig

    def step(
        self,
        population: Population,
        evaluator: Evaluator,
        rng: np.random.Generator,
        iteration: int,
        budget: int,
    ) -> Population:
        return ga_elitist_step(
            population, self.config, evaluator, rng, iteration, budget
        )

    def expected_evaluations(self, budget: int) -> int:
        n_elite, _, _ = offspring_counts(self.config)
        size = self.config.pop_size
        return size + budget * (size - n_elite)
