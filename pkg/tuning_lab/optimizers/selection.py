"""Parent selection of the elitist GA."""

import numpy as np
import numpy.typing as npt
from scipy.stats import rankdata

from .protocols import SelectionFn

IndexArray = npt.NDArray[np.int64]


def rank_expectations(
    fitness: npt.NDArray[np.float64],
) -> npt.NDArray[np.float64]:
    """Rank-scaled expectations, 1/sqrt(rank) with rank 1 the best.

    Tied fitness values share their averaged rank.
    """
    ranks = rankdata(fitness, method="average")
    return 1.0 / np.sqrt(ranks)


def _roulette(
    weights: npt.NDArray[np.float64], count: int, rng: np.random.Generator
) -> IndexArray:
    cumulative = np.cumsum(weights)
    pointers = rng.random(count) * cumulative[-1]
    picks = np.searchsorted(cumulative, pointers, side="right")
    return np.minimum(picks, len(weights) - 1).astype(np.int64)


def _stochastic_uniform(
    weights: npt.NDArray[np.float64], count: int, rng: np.random.Generator
) -> IndexArray:
    cumulative = np.cumsum(weights)
    step = cumulative[-1] / count
    pointers = rng.random() * step + step * np.arange(count)
    picks = np.searchsorted(cumulative, pointers, side="right")
    return np.minimum(picks, len(weights) - 1).astype(np.int64)


def _remainder(
    weights: npt.NDArray[np.float64], count: int, rng: np.random.Generator
) -> IndexArray:
    scaled = weights * count / weights.sum()
    whole = np.floor(scaled).astype(np.int64)
    picks = np.repeat(np.arange(len(weights), dtype=np.int64), whole)

    missing = count - len(picks)
    if missing > 0:
        fractions = scaled - whole
        if fractions.sum() <= 0:
            fractions = np.ones_like(fractions)
        picks = np.concatenate([picks, _roulette(fractions, missing, rng)])
    return picks[:count]


def _tournament(
    fitness: npt.NDArray[np.float64],
    count: int,
    size: int,
    rng: np.random.Generator,
) -> IndexArray:
    n = len(fitness)
    size = min(size, n)
    picks = np.empty(count, dtype=np.int64)
    for k in range(count):
        entrants = rng.choice(n, size=size, replace=False)
        picks[k] = min(entrants, key=lambda i: (fitness[i], i))
    return picks


def select(
    fitness: npt.NDArray[np.float64],
    sel_fn: SelectionFn | str,
    count: int,
    rng: np.random.Generator,
    tournament_size: int = 4,
) -> IndexArray:
    """Draw parents by the given scheme.

    Args:
        fitness: Fitness per individual (lower is better)
        sel_fn: Selection scheme
        count: Number of parents to draw
        rng: Random stream
        tournament_size: Entrants per tournament (capped at the
            population size)

    Returns:
        Population indices of the selected parents
    """
    fitness = np.asarray(fitness, dtype=np.float64)
    sel_fn = SelectionFn(sel_fn)
    if count <= 0:
        return np.empty(0, dtype=np.int64)

    if sel_fn is SelectionFn.UNIFORM:
        return rng.integers(0, len(fitness), size=count, dtype=np.int64)
    if sel_fn is SelectionFn.TOURNAMENT:
        return _tournament(fitness, count, tournament_size, rng)

    expectations = rank_expectations(fitness)
    if sel_fn is SelectionFn.ROULETTE:
        return _roulette(expectations, count, rng)
    if sel_fn is SelectionFn.STOCHUNIF:
        return _stochastic_uniform(expectations, count, rng)
    return _remainder(expectations, count, rng)
