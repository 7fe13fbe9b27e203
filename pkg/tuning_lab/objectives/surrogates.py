"""Evaluation of discrete surrogate objectives."""

import itertools
import logging
from collections.abc import Callable, Sequence

import numpy as np
import numpy.typing as npt

from ..exceptions import MissingEntryError, ObjectiveError, SpaceError
from ..space import (
    DiscreteSpace,
    IndexVector,
    cardinality,
    decode,
    decode_many,
)
from .benchmarks import ackley, eggholder_nd
from .protocols import Evaluation, ObjectiveKind, ObjectiveSpec, PenaltyRule

logger = logging.getLogger(__name__)

_BENCHMARKS: dict[ObjectiveKind, Callable] = {
    ObjectiveKind.ACKLEY: ackley,
    ObjectiveKind.EGGHOLDER: eggholder_nd,
}

PENALTY_CHECK_LIMIT = 1_000_000
_CHUNK_ROWS = 65_536


def benchmark_objective(
    kind: ObjectiveKind | str,
    space: DiscreteSpace,
    penalty: PenaltyRule | None = None,
    fitness_bound: float | None = None,
    check_limit: int = PENALTY_CHECK_LIMIT,
) -> ObjectiveSpec:
    """Create a discretized benchmark surrogate.

    A penalty must leave every infeasible solution worse than every
    feasible one. The worst feasible fitness is found by enumerating the
    space, or taken from ``fitness_bound`` when the caller knows it.

    Args:
        kind: ``ackley`` or ``eggholder``
        space: Grid the benchmark is sampled on
        penalty: Optional penalty rule
        fitness_bound: Upper bound of the unpenalized fitness
        check_limit: Largest space enumerated for the penalty check

    Returns:
        Benchmark-backed objective

    Raises:
        ObjectiveError: If the penalty is too weak, or cannot be checked
            because the space exceeds ``check_limit`` and no bound is given
        SpaceError: If an infeasible index vector lies outside the space
    """
    kind = ObjectiveKind(kind)
    if kind not in _BENCHMARKS:
        raise ObjectiveError(f"{kind.value} is not a benchmark surrogate")
    spec = ObjectiveSpec(kind=kind, space=space, penalty=penalty)
    _check_benchmark_penalty(spec, fitness_bound, check_limit)
    return spec


def _benchmark_fitness(
    spec: ObjectiveSpec, indices: npt.NDArray[np.int64]
) -> npt.NDArray[np.float64]:
    points = decode_many(indices, spec.space)
    return np.asarray(
        _BENCHMARKS[spec.kind](points), dtype=np.float64
    ).reshape(len(indices))


def _worst_feasible(spec: ObjectiveSpec, penalty: PenaltyRule) -> float:
    worst = -np.inf
    indices = spec.space.iter_indices()
    while chunk := list(itertools.islice(indices, _CHUNK_ROWS)):
        fitness = _benchmark_fitness(spec, np.array(chunk, dtype=np.int64))
        feasible = np.array([not penalty.is_infeasible(iv) for iv in chunk])
        if feasible.any():
            worst = max(worst, float(fitness[feasible].max()))
    return worst


def _check_benchmark_penalty(
    spec: ObjectiveSpec, bound: float | None, limit: int
) -> None:
    penalty = spec.penalty
    if penalty is None or not penalty.infeasible:
        return

    infeasible = sorted(penalty.infeasible)
    for iv in infeasible:
        if not spec.space.contains(iv):
            raise SpaceError(
                f"infeasible index vector {iv} is outside the space with "
                f"counts {spec.space.counts}"
            )

    if bound is None:
        total = cardinality(spec.space)
        if total > limit:
            raise ObjectiveError(
                f"cannot check the penalty over {total} solutions (limit "
                f"{limit}); give a fitness bound or use a table surrogate"
            )
        bound = _worst_feasible(spec, penalty)

    penalized = _benchmark_fitness(
        spec, np.array(infeasible, dtype=np.int64)
    ) + penalty.magnitude
    if np.isfinite(bound) and float(penalized.min()) <= bound:
        raise ObjectiveError(
            f"penalty magnitude {penalty.magnitude} does not make every "
            f"infeasible solution worse than the feasible maximum {bound}"
        )


def table_objective(
    space: DiscreteSpace,
    table: dict[IndexVector, float],
    penalty: PenaltyRule | None = None,
    literals: dict[IndexVector, str] | None = None,
) -> ObjectiveSpec:
    """Create a stored-table surrogate."""
    return ObjectiveSpec(
        kind=ObjectiveKind.TABLE,
        space=space,
        table=table,
        penalty=penalty,
        literals=literals,
    )


def _raw_fitness(spec: ObjectiveSpec, indices: IndexVector) -> float:
    if spec.kind is ObjectiveKind.TABLE:
        assert spec.table is not None
        try:
            return spec.table[indices]
        except KeyError:
            raise MissingEntryError(indices) from None
    return float(_BENCHMARKS[spec.kind](decode(indices, spec.space)))


def evaluate(spec: ObjectiveSpec, indices: Sequence[int]) -> Evaluation:
    """Evaluate one discrete solution.

    Args:
        spec: Objective
        indices: Index vector within spec.space

    Returns:
        Fitness (penalized when infeasible) and feasibility flag

    Raises:
        SpaceError: If the index vector is out of bounds
        MissingEntryError: If a table surrogate has no entry for it
    """
    iv = tuple(int(i) for i in indices)
    if spec.kind is ObjectiveKind.TABLE:
        decode(iv, spec.space)

    fitness = _raw_fitness(spec, iv)
    if spec.penalty is not None and spec.penalty.is_infeasible(iv):
        return Evaluation(
            fitness=fitness + spec.penalty.magnitude, feasible=False
        )
    return Evaluation(fitness=fitness, feasible=True)


def evaluate_many(
    spec: ObjectiveSpec, indices: npt.NDArray[np.int64]
) -> npt.NDArray[np.float64]:
    """Evaluate a matrix of in-range index vectors (one per row).

    Benchmarks are evaluated as one vectorized batch; tables are looked up
    row by row.

    Returns:
        Fitness per row, penalties included
    """
    indices = np.atleast_2d(indices)
    rows = [tuple(int(i) for i in row) for row in indices]

    if spec.kind is ObjectiveKind.TABLE:
        fitness = np.array(
            [_raw_fitness(spec, iv) for iv in rows], dtype=np.float64
        )
    else:
        fitness = _benchmark_fitness(spec, indices)

    if spec.penalty is not None:
        penalty = spec.penalty
        mask = np.array([penalty.is_infeasible(iv) for iv in rows])
        fitness = np.where(mask, fitness + penalty.magnitude, fitness)
    return fitness
