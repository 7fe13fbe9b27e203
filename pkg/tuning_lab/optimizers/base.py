"""Shared run loop of the population-based optimizers."""

import logging
import time
from abc import ABC, abstractmethod
from typing import Any

import numpy as np

from ..objectives import ObjectiveSpec
from ..space import random_genotype
from .evaluator import Evaluator, make_rng
from .protocols import Population, RunTrace

logger = logging.getLogger(__name__)


class BaseOptimizer(ABC):
    """Abstract base class for optimizers driven by a fixed budget.

    Subclasses build the initial population and advance it by one
    iteration; the base class owns the random stream, the evaluator and
    the best-so-far trace.
    """

    def __init__(self, config: Any, spec: ObjectiveSpec):
        """Initialize optimizer.

        Args:
            config: Validated method configuration
            spec: Objective to minimize
        """
        self.config = config
        self.spec = spec

    @property
    def population_size(self) -> int:
        return int(self.config.population_size)

    def run(self, budget: int, seed: int) -> RunTrace:
        """Optimize for ``budget`` iterations.

        Args:
            budget: Iterations after the initial population (>= 1)
            seed: Seed of the run's random stream

        Returns:
            Best-so-far trace with budget + 1 entries

        Raises:
            ValueError: If budget < 1
        """
        if budget < 1:
            raise ValueError(f"budget must be >= 1, got {budget}")

        start = time.perf_counter()
        rng = make_rng(seed)
        evaluator = Evaluator(self.spec)

        population = self.initialize(evaluator, rng)
        best = [evaluator.best_fitness]
        for iteration in range(1, budget + 1):
            population = self.step(
                population, evaluator, rng, iteration, budget
            )
            best.append(evaluator.best_fitness)

        assert evaluator.best_solution is not None
        leader = population.best()
        logger.debug(
            f"{type(self).__name__} finished: best {evaluator.best_fitness} "
            f"after {evaluator.evaluations} evaluations, final population "
            f"best {leader.fitness}",
            extra={
                "method": self.config.method,
                "duration_ms": round(
                    (time.perf_counter() - start) * 1000.0, 3
                ),
            },
        )
        return RunTrace(
            best=tuple(best),
            best_solution=evaluator.best_solution,
            evaluations=evaluator.evaluations,
        )

    def random_population(
        self, evaluator: Evaluator, rng: np.random.Generator
    ) -> Population:
        """Draw and evaluate a uniform random population."""
        genotypes = np.stack(
            [
                random_genotype(self.spec.space, rng)
                for _ in range(self.population_size)
            ]
        )
        return Population(
            genotypes=genotypes, fitness=evaluator.evaluate(genotypes)
        )

    def initialize(
        self, evaluator: Evaluator, rng: np.random.Generator
    ) -> Population:
        """Build the evaluated initial population."""
        return self.random_population(evaluator, rng)

    @abstractmethod
    def step(
        self,
        population: Population,
        evaluator: Evaluator,
        rng: np.random.Generator,
        iteration: int,
        budget: int,
    ) -> Population:
        """Advance the population by one iteration.

        Args:
            population: Evaluated population
            evaluator: Counting evaluator of the run
            rng: Random stream of the run
            iteration: 1-based iteration number
            budget: Total iterations of the run

        Returns:
            Evaluated population of the same size
        """
        pass

    @abstractmethod
    def expected_evaluations(self, budget: int) -> int:
        """Exact number of objective evaluations of a run."""
        pass
