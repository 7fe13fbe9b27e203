"""N-run assessment of configurations on a bounded worker pool."""

import logging
import time
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor

from ..exceptions import TuningError
from ..metrics import compute_apc, utility_fc
from ..objectives import ObjectiveSpec
from ..optimizers import OptimizerConfig, RunTrace, run
from .protocols import ConfigResult
from .seeds import SeedLedger, SeedStream

logger = logging.getLogger(__name__)

_WORKER_SPEC: ObjectiveSpec | None = None


def _init_worker(spec: ObjectiveSpec) -> None:
    global _WORKER_SPEC
    _WORKER_SPEC = spec


def _run_job(config: OptimizerConfig, budget: int, seed: int) -> RunTrace:
    assert _WORKER_SPEC is not None
    return run(config, _WORKER_SPEC, budget, seed)


IndexedConfig = tuple[int, OptimizerConfig]


class Assessor:
    """Runs seeded optimizations and folds them into ConfigResults.

    Jobs may finish in any order; traces are always aggregated in
    (config_index, run_index) order, so results do not depend on the
    worker count.

    Attributes:
        runs_executed: Optimizer runs completed by this assessor
        ledger: Seeds used so far (reuse is an error)
    """

    def __init__(
        self,
        spec: ObjectiveSpec,
        runs: int = 20,
        budget: int = 140,
        intervals: int = 14,
        z_l: float = 4.0,
        workers: int = 1,
        ledger: SeedLedger | None = None,
    ):
        """Initialize assessor.

        Args:
            spec: Objective every run optimizes
            runs: Runs per configuration (N)
            budget: Iterations per run
            intervals: APC sampling intervals (n)
            z_l: Weight of F_A in F_C
            workers: Worker processes (1 runs inline)
            ledger: Shared seed ledger

        Raises:
            TuningError: If a setting is out of range or the budget is
                not divisible by the interval count
        """
        if runs < 1 or budget < 1 or intervals < 1 or workers < 1:
            raise TuningError(
                f"runs, budget, intervals and workers must be >= 1, got "
                f"{runs}, {budget}, {intervals}, {workers}"
            )
        if budget % intervals != 0:
            raise TuningError(
                f"budget {budget} must be divisible by the interval count "
                f"n={intervals}"
            )
        self.spec = spec
        self.runs = runs
        self.budget = budget
        self.intervals = intervals
        self.z_l = z_l
        self.workers = workers
        self.ledger = ledger if ledger is not None else SeedLedger()
        self.runs_executed = 0

    def run_traces(
        self,
        configs: Sequence[IndexedConfig],
        stream: SeedStream,
        runs: int | None = None,
    ) -> list[tuple[list[int], list[RunTrace]]]:
        """Execute ``runs`` seeded runs of every configuration.

        Args:
            configs: (config_index, config) pairs
            stream: Seed stream of the phase
            runs: Runs per configuration (defaults to N)

        Returns:
            Per configuration, its seeds and traces in run order

        Raises:
            TuningError: If a seed repeats or a run fails
        """
        runs = self.runs if runs is None else runs
        jobs = [
            (index, config, r, stream.seed(index, r))
            for index, config in configs
            for r in range(runs)
        ]
        self.ledger.record(seed for *_, seed in jobs)

        start = time.perf_counter()
        if self.workers == 1 or len(jobs) <= 1:
            traces = [self._run_inline(*job) for job in jobs]
        else:
            traces = self._run_pool(jobs)
        self.runs_executed += len(jobs)

        logger.info(
            f"Executed {len(jobs)} runs of {len(configs)} configurations",
            extra={
                "phase": stream.phase,
                "duration_ms": round(
                    (time.perf_counter() - start) * 1000.0, 3
                ),
            },
        )
        return [
            (
                [job[3] for job in jobs[k * runs : (k + 1) * runs]],
                traces[k * runs : (k + 1) * runs],
            )
            for k in range(len(configs))
        ]

    def _run_inline(
        self, index: int, config: OptimizerConfig, run_index: int, seed: int
    ) -> RunTrace:
        try:
            return run(config, self.spec, self.budget, seed)
        except Exception as e:
            raise TuningError(
                f"run {run_index} of config {index} "
                f"({config.parameters()}) failed: {e}"
            ) from e

    def _run_pool(
        self, jobs: list[tuple[int, OptimizerConfig, int, int]]
    ) -> list[RunTrace]:
        with ProcessPoolExecutor(
            max_workers=self.workers,
            initializer=_init_worker,
            initargs=(self.spec,),
        ) as pool:
            futures = [
                pool.submit(_run_job, config, self.budget, seed)
                for _, config, _, seed in jobs
            ]
            traces = []
            for (index, config, run_index, _), future in zip(jobs, futures):
                try:
                    traces.append(future.result())
                except Exception as e:
                    for pending in futures:
                        pending.cancel()
                    raise TuningError(
                        f"run {run_index} of config {index} "
                        f"({config.parameters()}) failed: {e}"
                    ) from e
        return traces

    def result(
        self,
        index: int,
        config: OptimizerConfig,
        seeds: list[int],
        traces: list[RunTrace],
    ) -> ConfigResult:
        """Fold the traces of one configuration into a ConfigResult."""
        apc = compute_apc(traces)
        return ConfigResult(
            config=config,
            config_index=index,
            utility=utility_fc(apc, self.intervals, self.z_l),
            apc=apc,
            seeds=tuple(seeds),
            finals=tuple(t.final for t in traces),
        )

    def assess_many(
        self, configs: Sequence[OptimizerConfig], stream: SeedStream
    ) -> list[ConfigResult]:
        """Assess configurations indexed by their position."""
        indexed = list(enumerate(configs))
        outcomes = self.run_traces(indexed, stream)
        return [
            self.result(index, config, seeds, traces)
            for (index, config), (seeds, traces) in zip(indexed, outcomes)
        ]

    def assess(
        self,
        config: OptimizerConfig,
        stream: SeedStream,
        config_index: int = 0,
    ) -> ConfigResult:
        """Assess one configuration with N seeded runs."""
        [(seeds, traces)] = self.run_traces([(config_index, config)], stream)
        return self.result(config_index, config, seeds, traces)


def assess(
    config: OptimizerConfig,
    spec: ObjectiveSpec,
    runs: int,
    budget: int,
    seed_base: int | SeedStream,
    config_index: int = 0,
    intervals: int = 14,
    z_l: float = 4.0,
) -> ConfigResult:
    """Assess one configuration without a campaign context.

    Args:
        config: Configuration to assess
        spec: Objective
        runs: Runs (N)
        budget: Iterations per run
        seed_base: Master seed (stream ``assess``) or a seed stream
        config_index: Index the run seeds are derived with
        intervals: APC sampling intervals (n)
        z_l: Weight of F_A in F_C

    Returns:
        Assessment of the configuration
    """
    stream = (
        seed_base
        if isinstance(seed_base, SeedStream)
        else SeedStream(seed_base, "assess")
    )
    assessor = Assessor(spec, runs, budget, intervals, z_l)
    return assessor.assess(config, stream, config_index)
