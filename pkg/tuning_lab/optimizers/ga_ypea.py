"""Non-elitist real-coded GA with blend crossover and gene-wise mutation."""

import math

import numpy as np
import numpy.typing as npt

from ..space import Genotype
from .base import BaseOptimizer
from .evaluator import Evaluator, round_half_up
from .protocols import GaYpeaConfig, Population


def offspring_counts(config: GaYpeaConfig) -> tuple[int, int]:
    """Split a generation into (crossover, mutation) children."""
    size = config.pop_size
    n_xover = min(
        2 * round_half_up(config.cross_prob * size / 2), 2 * (size // 2)
    )
    return n_xover, size - n_xover


def selection_probabilities(
    fitness: npt.NDArray[np.float64], sel_press: float
) -> npt.NDArray[np.float64]:
    """Parent probabilities proportional to exp(-SelPress * scaled cost).

    Costs are min-max scaled to [0, 1]; equal costs give equal
    probabilities.
    """
    fitness = np.asarray(fitness, dtype=np.float64)
    best, worst = fitness.min(), fitness.max()
    if worst == best:
        return np.full(len(fitness), 1.0 / len(fitness))
    scaled = (fitness - best) / (worst - best)
    weights = np.exp(-sel_press * scaled)
    return weights / weights.sum()


def blend_factors(
    cross_infl: float, n_vars: int, rng: np.random.Generator
) -> npt.NDArray[np.float64]:
    """Per-gene blend factors drawn from [-CrossInfl, 1 + CrossInfl]."""
    return rng.uniform(-cross_infl, 1.0 + cross_infl, size=n_vars)


def blend_crossover(
    x1: Genotype, x2: Genotype, alpha: npt.NDArray[np.float64]
) -> tuple[Genotype, Genotype]:
    """Two children y1 = a*x1 + (1-a)*x2 and y2 = a*x2 + (1-a)*x1."""
    y1 = alpha * x1 + (1.0 - alpha) * x2
    y2 = alpha * x2 + (1.0 - alpha) * x1
    return y1, y2


def mutated_gene_count(mut_rate: float, n_vars: int) -> int:
    """Number of genes a mutant changes: ceil(MutRate * NVars)."""
    return min(math.ceil(round(mut_rate * n_vars, 9)), n_vars)


def mutate(
    x: Genotype,
    mut_rate: float,
    step: npt.NDArray[np.float64],
    rng: np.random.Generator,
) -> Genotype:
    """Add Gaussian steps to uniformly chosen distinct genes.

    Args:
        x: Parent genotype
        mut_rate: Fraction of genes to change
        step: Per-gene step size (MutStepSize times the gene range)
        rng: Random stream

    Returns:
        Mutated copy of x
    """
    y = np.array(x, dtype=np.float64)
    count = mutated_gene_count(mut_rate, len(y))
    genes = rng.choice(len(y), size=count, replace=False)
    y[genes] += step[genes] * rng.standard_normal(count)
    return y


def ga_ypea_step(
    population: Population,
    config: GaYpeaConfig,
    evaluator: Evaluator,
    rng: np.random.Generator,
) -> Population:
    """Replace the whole population by crossover and mutation children."""
    genotypes = population.genotypes
    size, n_vars = genotypes.shape
    n_xover, n_mut = offspring_counts(config)
    probs = selection_probabilities(population.fitness, config.sel_press)

    children: list[Genotype] = []
    for _ in range(n_xover // 2):
        i1, i2 = rng.choice(size, size=2, p=probs)
        alpha = blend_factors(config.cross_infl, n_vars, rng)
        children.extend(blend_crossover(genotypes[i1], genotypes[i2], alpha))

    step = config.mut_step_size * evaluator.spec.space.index_ranges
    for _ in range(n_mut):
        parent = int(rng.integers(size))
        children.append(mutate(genotypes[parent], config.mut_rate, step, rng))

    child_genotypes = np.stack(children)
    return Population(
        genotypes=child_genotypes,
        fitness=evaluator.evaluate(child_genotypes),
    )


class GaYpea(BaseOptimizer):
    """Generational GA without elitism; the best is tracked outside."""

    config: GaYpeaConfig

    def step(
        self,
        population: Population,
        evaluator: Evaluator,
        rng: np.random.Generator,
        iteration: int,
        budget: int,
    ) -> Population:
        return ga_ypea_step(population, self.config, evaluator, rng)

    def expected_evaluations(self, budget: int) -> int:
        return self.config.pop_size * (budget + 1)
