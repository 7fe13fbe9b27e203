"""Tuning strategies and the final validation.

Strategy 1 assesses the whole grid once and keeps the configuration with
the lowest F_C. Strategy 2 controls the grid between three assessment
phases: after the full grid (phase 0) it fixes the two non-population
parameters with the largest influence, after the reduced grid (phase 1)
it drops values whose group mean is clearly poor, and the surviving grid
(phase 2) decides. Each phase draws from its own seed stream.
"""

import logging
import math
from collections.abc import Sequence
from typing import Any

from ..exceptions import TuningError
from ..metrics import compute_apc, five_number, success_rate, utility_fc
from ..optimizers import OptimizerConfig
from .assessment import Assessor
from .grids import enumerate_grid
from .protocols import (
    ConfigResult,
    ParameterGrid,
    PhaseResult,
    TuningReport,
    ValidationSummary,
)
from .seeds import SeedStream

logger = logging.getLogger(__name__)

FIXED_PER_PHASE = 2
MIN_KEPT_VALUES = 2
DEFAULT_DROP_THRESHOLD = 0.25


def group_means(
    results: Sequence[ConfigResult], parameter: str
) -> tuple[tuple[Any, float], ...]:
    """Mean F_C per value of ``parameter``, values in first-seen order.

    Raises:
        TuningError: If the results are empty or lack the parameter
    """
    if not results:
        raise TuningError("no results to group")
    if parameter not in results[0].parameters:
        raise TuningError(
            f"parameter {parameter!r} is not part of the assessed "
            f"configurations"
        )

    groups: dict[Any, list[float]] = {}
    for result in results:
        value = result.parameters[parameter]
        groups.setdefault(value, []).append(result.utility.F_C)
    return tuple(
        (value, math.fsum(fcs) / len(fcs)) for value, fcs in groups.items()
    )


def influence(results: Sequence[ConfigResult], parameter: str) -> float:
    """Spread (max - min) of the per-value group means of F_C."""
    means = [m for _, m in group_means(results, parameter)]
    return max(means) - min(means)


def _phase(
    label: str,
    grid: ParameterGrid,
    results: list[ConfigResult],
    **decisions: Any,
) -> PhaseResult:
    means = {name: group_means(results, name) for name in grid.names}
    return PhaseResult(
        phase=label,
        grid=grid,
        results=tuple(results),
        fc_summary=five_number([r.utility.F_C for r in results]),
        group_means=means,
        influences={
            name: max(m for _, m in values) - min(m for _, m in values)
            for name, values in means.items()
        },
        **decisions,
    )


def _assess_grid(
    grid: ParameterGrid, assessor: Assessor, stream: SeedStream
) -> list[ConfigResult]:
    configs = enumerate_grid(grid)
    logger.info(
        f"Assessing {len(configs)} {grid.method.value} configurations "
        f"x {assessor.runs} runs",
        extra={"method": grid.method.value, "phase": stream.phase},
    )
    return assessor.assess_many(configs, stream)


def validate(
    config: OptimizerConfig,
    assessor: Assessor,
    runs: int,
    master_seed: int,
    label: str = "validation",
    optimum: float | None = None,
    tolerance: float = 1e-9,
) -> ValidationSummary:
    """Re-run a configuration on a fresh seed stream.

    Args:
        config: Configuration to validate
        assessor: Assessor (objective, budget and seed ledger)
        runs: Validation runs
        master_seed: Campaign master seed
        label: Seed stream name, distinct from every tuning phase
        optimum: Known optimum for the success rate
        tolerance: Distance to the optimum counted as success

    Returns:
        Validation summary
    """
    if runs < 1:
        raise TuningError(f"validation needs runs >= 1, got {runs}")

    stream = SeedStream(master_seed, label)
    [(_, traces)] = assessor.run_traces([(0, config)], stream, runs)
    finals = tuple(t.final for t in traces)
    apc = compute_apc(traces)

    summary = ValidationSummary(
        runs=runs,
        final_fitness=five_number(finals),
        mean_final=math.fsum(finals) / len(finals),
        utility=utility_fc(apc, assessor.intervals, assessor.z_l),
        apc=apc,
        finals=finals,
        optimum=optimum,
        success_rate=(
            None
            if optimum is None
            else success_rate(finals, optimum, tolerance)
        ),
        tolerance=tolerance,
    )
    logger.info(
        f"Validated {config.method} over {runs} runs: mean final "
        f"{summary.mean_final}, success rate {summary.success_rate}",
        extra={"method": config.method, "phase": label},
    )
    return summary


def tune_strategy1(
    grid: ParameterGrid,
    assessor: Assessor,
    master_seed: int,
    phase: str = "s1",
    validation_runs: int | None = None,
    optimum: float | None = None,
    tolerance: float = 1e-9,
) -> TuningReport:
    """Assess every configuration once and keep the lowest F_C.

    Args:
        grid: Grid to assess
        assessor: Assessor (objective, N, budget, workers)
        master_seed: Campaign master seed
        phase: Seed stream name of the assessment
        validation_runs: Runs of a fresh-seed validation (None skips it)
        optimum: Known optimum for the validation success rate
        tolerance: Validation success tolerance

    Returns:
        Report with one phase; ties go to the lowest config_index
    """
    start_runs = assessor.runs_executed
    results = _assess_grid(grid, assessor, SeedStream(master_seed, phase))
    record = _phase(phase, grid, results)
    best = record.best()
    logger.info(
        f"Strategy 1 picked config {best.config_index} with F_C "
        f"{best.utility.F_C}",
        extra={"method": grid.method.value, "phase": phase},
    )

    validation = None
    if validation_runs is not None:
        validation = validate(
            best.config,
            assessor,
            validation_runs,
            master_seed,
            "validation:s1",
            optimum,
            tolerance,
        )
    return TuningReport(
        method=grid.method,
        strategy=1,
        master_seed=master_seed,
        phases=(record,),
        best=best,
        runs_executed=assessor.runs_executed - start_runs,
        validation=validation,
    )


def _fix_influential(
    grid: ParameterGrid, results: list[ConfigResult]
) -> dict[str, Any]:
    candidates = [
        name
        for name in grid.free_parameters()
        if name != grid.population_parameter
    ]
    ranked = sorted(candidates, key=lambda n: -influence(results, n))
    fixed = {}
    for name in ranked[:FIXED_PER_PHASE]:
        means = group_means(results, name)
        fixed[name] = min(means, key=lambda vm: vm[1])[0]
    return fixed


def _drop_poor_values(
    grid: ParameterGrid,
    results: list[ConfigResult],
    drop_threshold: float,
) -> dict[str, tuple[Any, ...]]:
    dropped = {}
    for name in grid.free_parameters():
        means = group_means(results, name)
        best = min(m for _, m in means)
        worst = max(m for _, m in means)
        limit = best + drop_threshold * (worst - best)
        kept = {v for v, m in means if m <= limit}
        if len(kept) < MIN_KEPT_VALUES:
            ranked = sorted(
                range(len(means)), key=lambda k: (means[k][1], k)
            )
            kept = {means[k][0] for k in ranked[:MIN_KEPT_VALUES]}
        removed = tuple(v for v, _ in means if v not in kept)
        if removed:
            dropped[name] = removed
    return dropped


def tune_strategy2(
    grid: ParameterGrid,
    assessor: Assessor,
    master_seed: int,
    drop_threshold: float = DEFAULT_DROP_THRESHOLD,
    validation_runs: int | None = None,
    optimum: float | None = None,
    tolerance: float = 1e-9,
) -> TuningReport:
    """Tune in three phases, narrowing the grid between them.

    Args:
        grid: Starting grid
        assessor: Assessor (objective, N, budget, workers)
        master_seed: Campaign master seed
        drop_threshold: Share of the best-to-worst group-mean span a
            value may lie above the best mean and still be kept
        validation_runs: Runs of a fresh-seed validation (None skips it)
        optimum: Known optimum for the validation success rate
        tolerance: Validation success tolerance

    Returns:
        Report with three phases; best comes from the last one
    """
    start_runs = assessor.runs_executed
    method = grid.method.value

    results0 = _assess_grid(
        grid, assessor, SeedStream(master_seed, "s2-phase0")
    )
    fixed = _fix_influential(grid, results0)
    phase0 = _phase("s2-phase0", grid, results0, fixed=fixed)
    logger.info(
        f"Phase 0 fixed {fixed}",
        extra={"method": method, "phase": "s2-phase0"},
    )

    grid1 = grid
    for name, value in fixed.items():
        grid1 = grid1.with_values(name, (value,))
    results1 = _assess_grid(
        grid1, assessor, SeedStream(master_seed, "s2-phase1")
    )
    dropped = _drop_poor_values(grid1, results1, drop_threshold)
    phase1 = _phase("s2-phase1", grid1, results1, dropped=dropped)
    if dropped:
        logger.info(
            f"Phase 1 dropped {dropped}",
            extra={"method": method, "phase": "s2-phase1"},
        )
    else:
        logger.warning(
            "Phase 1 found no value to drop",
            extra={"method": method, "phase": "s2-phase1"},
        )

    grid2 = grid1
    for name, removed in dropped.items():
        grid2 = grid2.with_values(
            name, tuple(v for v in grid2.values(name) if v not in removed)
        )
    results2 = _assess_grid(
        grid2, assessor, SeedStream(master_seed, "s2-phase2")
    )
    phase2 = _phase("s2-phase2", grid2, results2)
    best = phase2.best()
    logger.info(
        f"Strategy 2 picked config {best.config_index} with F_C "
        f"{best.utility.F_C}",
        extra={"method": method, "phase": "s2-phase2"},
    )

    validation = None
    if validation_runs is not None:
        validation = validate(
            best.config,
            assessor,
            validation_runs,
            master_seed,
            "validation:s2",
            optimum,
            tolerance,
        )
    return TuningReport(
        method=grid.method,
        strategy=2,
        master_seed=master_seed,
        phases=(phase0, phase1, phase2),
        best=best,
        runs_executed=assessor.runs_executed - start_runs,
        validation=validation,
    )
