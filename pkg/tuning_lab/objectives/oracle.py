"""Exhaustive enumeration oracle for small discrete spaces."""

import itertools
import logging
import time

import numpy as np

from ..exceptions import OracleLimitError
from ..space import IndexVector, cardinality
from .protocols import ObjectiveSpec, OracleResult
from .surrogates import evaluate_many

logger = logging.getLogger(__name__)

DEFAULT_ORACLE_LIMIT = 10_000_000
_CHUNK_ROWS = 65_536


def brute_force_optimum(
    spec: ObjectiveSpec, limit: int = DEFAULT_ORACLE_LIMIT
) -> OracleResult:
    """Find the exact minimum by enumerating every solution.

    Solutions are visited in lexicographic order and only strict
    improvements replace the incumbent, so ties resolve to the
    lexicographically smallest index vector.

    Args:
        spec: Objective to minimize
        limit: Largest cardinality that may be enumerated

    Returns:
        Minimizer, minimum, cardinality and wall time

    Raises:
        OracleLimitError: If the space is larger than ``limit``
        MissingEntryError: If a table surrogate has a hole
    """
    total = cardinality(spec.space)
    if total > limit:
        raise OracleLimitError(total, limit)

    logger.info(f"Enumerating {total} solutions of a {spec.kind.value} space")
    start = time.perf_counter()

    best_indices: IndexVector | None = None
    best_fitness = np.inf
    indices = spec.space.iter_indices()

    while chunk := list(itertools.islice(indices, _CHUNK_ROWS)):
        fitness = evaluate_many(spec, np.array(chunk, dtype=np.int64))
        position = int(np.argmin(fitness))
        if best_indices is None or fitness[position] < best_fitness:
            best_fitness = float(fitness[position])
            best_indices = tuple(chunk[position])

    assert best_indices is not None
    wall_time = time.perf_counter() - start
    logger.info(
        f"Oracle optimum {best_fitness!r} at {best_indices} "
        f"({wall_time:.3f}s)"
    )
    return OracleResult(
        indices=best_indices,
        fitness=best_fitness,
        cardinality=total,
        wall_time=wall_time,
    )
