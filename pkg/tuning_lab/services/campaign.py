"""Campaign service: single runs, tuning, oracle and comparison reports."""

import itertools
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from logging_config import log_context

from ..campaign import CampaignConfig
from ..exceptions import OracleLimitError
from ..metrics import FiveNumber, five_number, mann_whitney_less
from ..objectives import ObjectiveSpec, OracleResult, brute_force_optimum
from ..optimizers import expected_evaluations
from ..reporting import (
    plot_apc,
    plot_boxes,
    plot_influence,
    read_json,
    trace_frame,
    write_frame,
    write_json,
)
from ..space import cardinality
from ..tuner import (
    Assessor,
    SeedStream,
    TuningReport,
    tune_strategy1,
    tune_strategy2,
)

logger = logging.getLogger(__name__)

REPORT_SUFFIX = "_report.json"


@dataclass
class CommandResult:
    """Files written by a command and a one-line summary."""

    summary: str
    outputs: list[Path] = field(default_factory=list)


@dataclass(frozen=True)
class LoadedReport:
    """The parts of a saved TuningReport the comparison needs."""

    label: str
    method: str
    strategy: int
    fc_values: tuple[float, ...]
    best_apc: tuple[float, ...]
    influences: dict[str, dict[str, float]]

    @classmethod
    def from_file(cls, path: Path) -> "LoadedReport":
        """Parse a saved report.

        Raises:
            ValueError: If required fields are missing or malformed
        """
        data = read_json(path)
        try:
            phases = data["phases"]
            return cls(
                label=path.name[: -len(REPORT_SUFFIX)],
                method=str(data["method"]),
                strategy=int(data["strategy"]),
                fc_values=tuple(
                    float(r["utility"]["F_C"]) for r in phases[0]["results"]
                ),
                best_apc=tuple(
                    float(v) for v in data["best"]["apc"]["mean_best"]
                ),
                influences={
                    p["phase"]: {
                        k: float(v) for k, v in p["influences"].items()
                    }
                    for p in phases
                },
            )
        except (KeyError, IndexError, TypeError) as e:
            raise ValueError(f"{path} is not a tuning report: {e!r}") from e


class CampaignService:
    """Executes campaign commands and writes their artifacts."""

    def __init__(self, campaign: CampaignConfig):
        """Initialize campaign service.

        Args:
            campaign: Validated campaign
        """
        self.campaign = campaign

    @property
    def output_dir(self) -> Path:
        return self.campaign.output

    def _objective(self) -> ObjectiveSpec:
        return self.campaign.problem.build()

    def _assessor(self, spec: ObjectiveSpec) -> Assessor:
        c = self.campaign
        return Assessor(
            spec,
            runs=c.runs,
            budget=c.budget,
            intervals=c.intervals,
            z_l=c.z_l,
            workers=c.workers,
        )

    def run(self) -> CommandResult:
        """Assess the campaign's single configuration with N seeded runs.

        Writes ``trace.csv``, ``utility.json`` and ``apc.svg``.
        """
        with log_context(campaign=self.campaign.name):
            return self._run()

    def _run(self) -> CommandResult:
        config = self.campaign.require_optimizer()
        spec = self._objective()
        assessor = self._assessor(spec)

        stream = SeedStream(self.campaign.master_seed, "run")
        [(seeds, traces)] = assessor.run_traces([(0, config)], stream)
        result = assessor.result(0, config, seeds, traces)

        out = self.output_dir
        payload = {
            "campaign": self.campaign.name,
            "method": config.method,
            "parameters": config.parameters(),
            "master_seed": self.campaign.master_seed,
            "runs": self.campaign.runs,
            "budget": self.campaign.budget,
            "evaluations_per_run": expected_evaluations(
                config, self.campaign.budget
            ),
            "utility": result.utility.to_dict(),
            "apc": result.apc.to_dict(),
            "seeds": list(result.seeds),
            "finals": list(result.finals),
            "traces": [list(t.best) for t in traces],
            "best_solutions": [list(t.best_solution) for t in traces],
        }
        outputs = [
            write_frame(out / "trace.csv", trace_frame(traces)),
            write_json(out / "utility.json", payload),
            plot_apc(
                {config.method: result.apc.mean_best},
                out / "apc.svg",
                title=f"{config.method} APC (N={self.campaign.runs})",
            ),
        ]
        return CommandResult(
            summary=(
                f"{config.method}: F_C={result.utility.F_C} "
                f"F_A={result.utility.F_A} over {self.campaign.runs} runs"
            ),
            outputs=outputs,
        )

    def _reference_optimum(self, spec: ObjectiveSpec) -> float | None:
        if self.campaign.optimum is not None:
            return self.campaign.optimum
        try:
            return brute_force_optimum(
                spec, self.campaign.oracle_limit
            ).fitness
        except OracleLimitError as e:
            logger.info(f"No reference optimum for validation: {e}")
            return None

    def tune(self, validate: bool = True) -> CommandResult:
        """Run the configured tuning strategy on the campaign grid.

        Args:
            validate: Re-run the winner on fresh seeds afterwards
        """
        with log_context(campaign=self.campaign.name):
            return self._tune(validate)

    def _tune(self, validate: bool) -> CommandResult:
        c = self.campaign
        grid = c.build_grid()
        spec = self._objective()
        assessor = self._assessor(spec)

        optimum = self._reference_optimum(spec) if validate else None
        validation_runs = c.validation_runs if validate else None
        report: TuningReport
        if c.strategy == 1:
            report = tune_strategy1(
                grid,
                assessor,
                c.master_seed,
                validation_runs=validation_runs,
                optimum=optimum,
                tolerance=c.tolerance,
            )
        else:
            report = tune_strategy2(
                grid,
                assessor,
                c.master_seed,
                drop_threshold=c.drop_threshold,
                validation_runs=validation_runs,
                optimum=optimum,
                tolerance=c.tolerance,
            )

        stem = f"{grid.method.value}_s{c.strategy}"
        out = self.output_dir
        data = report.to_dict()
        data["campaign"] = c.name
        outputs = [
            write_json(out / f"{stem}{REPORT_SUFFIX}", data),
            write_frame(out / f"{stem}_report.csv", report.to_frame()),
        ]
        for p, phase in enumerate(report.phases):
            outputs.append(
                plot_boxes(
                    {phase.phase: phase.fc_summary},
                    out / f"{stem}_phase{p}_box.svg",
                    title=f"{grid.method.value} {phase.phase}: F_C of "
                    f"{len(phase.results)} configurations",
                )
            )
        outputs.append(
            plot_apc(
                {grid.method.value: report.best.apc.mean_best},
                out / f"{stem}_best_apc.svg",
                title=f"{grid.method.value} strategy {c.strategy}: best APC",
            )
        )
        return CommandResult(
            summary=(
                f"{grid.method.value} strategy {c.strategy}: best F_C "
                f"{report.best.utility.F_C} ({report.runs_executed} runs)"
            ),
            outputs=outputs,
        )

    def oracle(self) -> CommandResult:
        """Enumerate the campaign's space and write ``oracle.json``."""
        with log_context(campaign=self.campaign.name):
            return self._oracle()

    def _oracle(self) -> CommandResult:
        spec = self._objective()
        result: OracleResult = brute_force_optimum(
            spec, self.campaign.oracle_limit
        )
        data = result.to_dict()
        data["objective"] = spec.kind.value
        data["counts"] = list(spec.space.counts)
        path = write_json(self.output_dir / "oracle.json", data)
        return CommandResult(
            summary=(
                f"optimum {result.fitness} at {list(result.indices)} of "
                f"{cardinality(spec.space)} solutions"
            ),
            outputs=[path],
        )


def load_reports(results_dir: str | Path) -> list[LoadedReport]:
    """Load every tuning report of a directory, sorted by file name.

    Raises:
        FileNotFoundError: If the directory does not exist
        ValueError: If no report is found or some cannot be parsed
    """
    results_dir = Path(results_dir)
    if not results_dir.is_dir():
        raise FileNotFoundError(f"Directory not found: {results_dir}")

    paths = sorted(results_dir.glob(f"*{REPORT_SUFFIX}"))
    if not paths:
        raise ValueError(
            f"no tuning reports (*{REPORT_SUFFIX}) in {results_dir}"
        )

    reports, failures = [], []
    for path in paths:
        try:
            reports.append(LoadedReport.from_file(path))
        except ValueError as e:
            failures.append(f"{path.name}: {e}")
    if failures:
        raise ValueError("unreadable reports:\n  " + "\n  ".join(failures))
    return reports


def compare_methods(reports: list[LoadedReport]) -> dict[str, Any]:
    """Per-report F_C summaries and pairwise one-sided method tests.

    The F_C sample of a report is its first (full-grid) phase; reports of
    the same method are pooled for the pairwise tests.
    """
    summaries: dict[str, FiveNumber] = {
        r.label: five_number(r.fc_values) for r in reports
    }
    pooled: dict[str, list[float]] = {}
    for r in reports:
        pooled.setdefault(r.method, []).extend(r.fc_values)

    pairwise = []
    for a, b in itertools.permutations(sorted(pooled), 2):
        pairwise.append(
            {
                "lower": a,
                "higher": b,
                "p_value": mann_whitney_less(pooled[a], pooled[b]),
            }
        )
    return {
        "reports": [
            {
                "label": r.label,
                "method": r.method,
                "strategy": r.strategy,
                "configurations": len(r.fc_values),
                "fc_summary": summaries[r.label].to_dict(),
            }
            for r in reports
        ],
        "method_medians": {
            m: five_number(v).median for m, v in sorted(pooled.items())
        },
        "mann_whitney_less": pairwise,
    }


def report(
    results_dir: str | Path, out_dir: str | Path | None = None
) -> CommandResult:
    """Compare the tuning reports of a directory.

    Writes ``comparison.json``, ``comparison_box.svg``,
    ``comparison_apc.svg`` and one ``<report>_influence.svg`` per report.
    """
    reports = load_reports(results_dir)
    out = Path(out_dir) if out_dir is not None else Path(results_dir)
    comparison = compare_methods(reports)

    outputs = [
        write_json(out / "comparison.json", comparison),
        plot_boxes(
            {
                r["label"]: FiveNumber.from_dict(r["fc_summary"])
                for r in comparison["reports"]
            },
            out / "comparison_box.svg",
            title="F_C across configurations per method",
        ),
        plot_apc(
            {r.label: r.best_apc for r in reports},
            out / "comparison_apc.svg",
            title="APC of the selected configurations",
        ),
    ]
    for r in reports:
        outputs.append(
            plot_influence(
                r.influences,
                out / f"{r.label}_influence.svg",
                title=f"{r.label}: parameter influence",
            )
        )

    medians = comparison["method_medians"]
    best = min(medians, key=lambda m: (medians[m], m))
    return CommandResult(
        summary=f"compared {len(reports)} reports; lowest median F_C: {best}",
        outputs=outputs,
    )
