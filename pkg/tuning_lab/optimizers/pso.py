"""Particle swarm with adaptive neighborhood size and inertia."""

import logging
import math
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from .base import BaseOptimizer
from .evaluator import Evaluator
from .protocols import Population, PsoConfig

logger = logging.getLogger(__name__)

STALL_GROW = 2
STALL_SHRINK = 5


@dataclass
class SwarmState:
    """Adaptive quantities carried between iterations.

    Attributes:
        min_neighborhood: Initial (minimum) neighborhood size
        neighborhood_size: Current neighborhood size N
        stall: Iterations without global improvement (softened)
        inertia: Current inertia W
        best_fitness: Best personal-best fitness so far
    """

    min_neighborhood: int
    neighborhood_size: int
    stall: int
    inertia: float
    best_fitness: float


def neighborhood_size(swarm_size: int, min_fract_neigh: float) -> int:
    """Minimum adaptive neighborhood size max(1, floor(S * MinFractNeigh))."""
    return max(1, math.floor(round(swarm_size * min_fract_neigh, 9)))


def initial_inertia(inertia_range: tuple[float, float]) -> float:
    """Start at the top of the range, or the bottom when it is negative."""
    low, high = inertia_range
    return low if low < 0 else high


def pso_velocity(
    v: npt.NDArray[np.float64],
    x: npt.NDArray[np.float64],
    p: npt.NDArray[np.float64],
    g: npt.NDArray[np.float64],
    inertia: float,
    self_adj: float,
    social_adj: float,
    u1: npt.NDArray[np.float64],
    u2: npt.NDArray[np.float64],
) -> npt.NDArray[np.float64]:
    """Velocity update W*v + y1*u1*(p - x) + y2*u2*(g - x)."""
    return (
        inertia * v
        + self_adj * u1 * (p - x)
        + social_adj * u2 * (g - x)
    )


def adapt(state: SwarmState, improved: bool, config: PsoConfig) -> None:
    """Update neighborhood size, stall counter and inertia in place."""
    if improved:
        state.stall = max(0, state.stall - 1)
        state.neighborhood_size = state.min_neighborhood
    else:
        state.stall += 1
        state.neighborhood_size = min(
            state.neighborhood_size + state.min_neighborhood,
            config.swarm_size,
        )

    if state.stall < STALL_GROW:
        state.inertia *= 2.0
    elif state.stall > STALL_SHRINK:
        state.inertia /= 2.0
    low, high = config.inertia_range
    state.inertia = float(np.clip(state.inertia, low, high))


def _neighborhood_best(
    i: int,
    size: int,
    best_fitness: npt.NDArray[np.float64],
    rng: np.random.Generator,
) -> int:
    others = np.delete(np.arange(len(best_fitness)), i)
    drawn = rng.choice(others, size=min(size - 1, len(others)), replace=False)
    members = np.sort(np.append(drawn, i))
    return int(members[np.argmin(best_fitness[members])])


def pso_step(
    swarm: Population,
    config: PsoConfig,
    evaluator: Evaluator,
    state: SwarmState,
    rng: np.random.Generator,
) -> Population:
    """Move every particle once, then adapt the swarm state.

    Args:
        swarm: Evaluated swarm with velocities and personal bests
        config: Method configuration
        evaluator: Counting evaluator
        state: Adaptive state, updated in place
        rng: Random stream

    Returns:
        Moved and evaluated swarm
    """
    assert swarm.velocities is not None
    assert swarm.best_genotypes is not None
    assert swarm.best_fitness is not None

    size, n_vars = swarm.genotypes.shape
    limit = evaluator.spec.space.index_ranges
    positions = swarm.genotypes.copy()
    velocities = swarm.velocities.copy()

    for i in range(size):
        g = _neighborhood_best(
            i, state.neighborhood_size, swarm.best_fitness, rng
        )
        u1 = rng.random(n_vars)
        u2 = rng.random(n_vars)
        v = pso_velocity(
            velocities[i],
            positions[i],
            swarm.best_genotypes[i],
            swarm.best_genotypes[g],
            state.inertia,
            config.self_adj,
            config.social_adj,
            u1,
            u2,
        )
        velocities[i] = np.clip(v, -limit, limit)
        positions[i] = positions[i] + velocities[i]

    fitness = evaluator.evaluate(positions)
    improved_rows = fitness < swarm.best_fitness
    best_genotypes = np.where(
        improved_rows[:, None], positions, swarm.best_genotypes
    )
    best_fitness = np.where(improved_rows, fitness, swarm.best_fitness)

    swarm_best = float(best_fitness.min())
    improved = swarm_best < state.best_fitness
    if improved:
        state.best_fitness = swarm_best
    adapt(state, improved, config)

    return Population(
        genotypes=positions,
        fitness=fitness,
        velocities=velocities,
        best_genotypes=best_genotypes,
        best_fitness=best_fitness,
    )


class Pso(BaseOptimizer):
    """Particle swarm; every particle is re-evaluated each iteration."""

    config: PsoConfig

    def initialize(
        self, evaluator: Evaluator, rng: np.random.Generator
    ) -> Population:
        swarm = self.random_population(evaluator, rng)
        limit = self.spec.space.index_ranges
        swarm.velocities = np.stack(
            [rng.uniform(-limit, limit) for _ in range(len(swarm))]
        )
        swarm.best_genotypes = swarm.genotypes.copy()
        swarm.best_fitness = swarm.fitness.copy()

        n = neighborhood_size(
            self.config.swarm_size, self.config.min_fract_neigh
        )
        self._state = SwarmState(
            min_neighborhood=n,
            neighborhood_size=n,
            stall=0,
            inertia=initial_inertia(self.config.inertia_range),
            best_fitness=float(swarm.best_fitness.min()),
        )
        return swarm

    def step(
        self,
        population: Population,
        evaluator: Evaluator,
        rng: np.random.Generator,
        iteration: int,
        budget: int,
    ) -> Population:
        return pso_step(population, self.config, evaluator, self._state, rng)

    def expected_evaluations(self, budget: int) -> int:
        return self.config.swarm_size * (budget + 1)
