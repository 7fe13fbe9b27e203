"""Crossover operators of the elitist GA."""

import numpy as np

from ..space import Genotype
from .protocols import CrossoverFn

HEURISTIC_RATIO = 1.2


def crossover_elitist(
    p1: Genotype,
    p2: Genotype,
    cross_fn: CrossoverFn | str,
    rng: np.random.Generator,
    fitness: tuple[float, float] | None = None,
) -> Genotype:
    """Combine two parents into one child.

    Args:
        p1: First parent
        p2: Second parent
        cross_fn: Operator
        rng: Random stream
        fitness: Parent fitness, used by ``heuristic`` to find the better
            parent (p1 is taken as better when omitted or tied)

    Returns:
        Child genotype (unclamped)
    """
    p1 = np.asarray(p1, dtype=np.float64)
    p2 = np.asarray(p2, dtype=np.float64)
    cross_fn = CrossoverFn(cross_fn)
    n = len(p1)

    if cross_fn is CrossoverFn.SCATTERED:
        mask = rng.random(n) < 0.5
        return np.where(mask, p1, p2)

    if cross_fn is CrossoverFn.SINGLEPOINT:
        if n < 2:
            return p1.copy()
        cut = int(rng.integers(1, n))
        return np.concatenate([p1[:cut], p2[cut:]])

    if cross_fn is CrossoverFn.TWOPOINTS:
        start, stop = np.sort(rng.choice(n + 1, size=2, replace=False))
        child = p1.copy()
        child[start:stop] = p2[start:stop]
        return child

    if cross_fn is CrossoverFn.INTERMEDIATE:
        return p1 + rng.random(n) * (p2 - p1)

    if cross_fn is CrossoverFn.HEURISTIC:
        better, worse = p1, p2
        if fitness is not None and fitness[1] < fitness[0]:
            better, worse = p2, p1
        return worse + HEURISTIC_RATIO * (better - worse)

    # arithmetic, written so identical parents reproduce exactly
    a = rng.random()
    return p2 + a * (p1 - p2)
