"""Domain types of grid tuning."""

from dataclasses import dataclass, field
from typing import Any

import pandas as pd

from ..exceptions import TuningError
from ..metrics import APC, FiveNumber, UtilityReport
from ..optimizers import MethodName, OptimizerConfig

#: Tuned parameters per method, in enumeration order
GRID_PARAMETERS: dict[MethodName, tuple[str, ...]] = {
    MethodName.GA_ELITIST: (
        "PopSize",
        "ECountFract",
        "CrossFract",
        "SelFn",
        "CrossFn",
    ),
    MethodName.GA_YPEA: (
        "PopSize",
        "CrossProb",
        "CrossInfl",
        "MutRate",
        "MutStepSize",
        "SelPress",
    ),
    MethodName.PSO: ("SwarmSize", "MinFractNeigh", "SelfAdj", "SocialAdj"),
    MethodName.BBO: (
        "PopSize",
        "Alpha",
        "MutProb",
        "MutStepSize",
        "MutStepSizeDamp",
    ),
}

POPULATION_PARAMETERS: dict[MethodName, str] = {
    MethodName.GA_ELITIST: "PopSize",
    MethodName.GA_YPEA: "PopSize",
    MethodName.PSO: "SwarmSize",
    MethodName.BBO: "PopSize",
}


@dataclass(frozen=True)
class ParameterGrid:
    """Candidate values of every tuned parameter of one method.

    Attributes:
        method: Optimizer the grid belongs to
        parameters: (name, values) pairs in enumeration order
        constants: Untuned parameters passed to every configuration
    """

    method: MethodName
    parameters: tuple[tuple[str, tuple[Any, ...]], ...]
    constants: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        method = MethodName(self.method)
        object.__setattr__(self, "method", method)
        object.__setattr__(
            self,
            "parameters",
            tuple((name, tuple(values)) for name, values in self.parameters),
        )

        names = [name for name, _ in self.parameters]
        expected = GRID_PARAMETERS[method]
        if sorted(names) != sorted(expected) or len(set(names)) != len(names):
            raise TuningError(
                f"{method.value} grid must list each of {list(expected)} "
                f"exactly once, got {names}"
            )
        for name, values in self.parameters:
            if not values:
                raise TuningError(f"parameter {name} has no candidate values")
            if len(set(values)) != len(values):
                raise TuningError(f"parameter {name} repeats a value")
        overlap = set(self.constants) & set(names)
        if overlap:
            raise TuningError(
                f"parameters {sorted(overlap)} are both tuned and constant"
            )

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.parameters)

    @property
    def size(self) -> int:
        total = 1
        for _, values in self.parameters:
            total *= len(values)
        return total

    @property
    def population_parameter(self) -> str:
        return POPULATION_PARAMETERS[self.method]

    def values(self, name: str) -> tuple[Any, ...]:
        """Candidate values of one parameter.

        Raises:
            TuningError: If the grid has no such parameter
        """
        for candidate, values in self.parameters:
            if candidate == name:
                return values
        raise TuningError(
            f"{self.method.value} grid has no parameter {name!r}"
        )

    def free_parameters(self) -> tuple[str, ...]:
        """Parameters with more than one candidate value."""
        return tuple(
            name for name, values in self.parameters if len(values) > 1
        )

    def with_values(
        self, name: str, values: tuple[Any, ...]
    ) -> "ParameterGrid":
        """Copy of the grid with the candidates of ``name`` replaced."""
        self.values(name)
        return ParameterGrid(
            method=self.method,
            parameters=tuple(
                (n, tuple(values) if n == name else v)
                for n, v in self.parameters
            ),
            constants=dict(self.constants),
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "method": self.method.value,
            "parameters": {
                name: list(values) for name, values in self.parameters
            },
            "constants": dict(self.constants),
        }


@dataclass(frozen=True)
class ConfigResult:
    """Assessment of one configuration over N seeded runs.

    Attributes:
        config: Assessed configuration
        config_index: Position in the enumerated grid of its phase
        utility: Utilities of the APC
        apc: Average performance curve
        seeds: Seeds of the N runs
        finals: Final best fitness of each run
    """

    config: OptimizerConfig
    config_index: int
    utility: UtilityReport
    apc: APC
    seeds: tuple[int, ...]
    finals: tuple[float, ...]

    @property
    def parameters(self) -> dict[str, Any]:
        return self.config.parameters()

    def to_dict(self) -> dict[str, Any]:
        return {
            "config_index": self.config_index,
            "method": self.config.method,
            "parameters": self.parameters,
            "utility": self.utility.to_dict(),
            "apc": self.apc.to_dict(),
            "seeds": list(self.seeds),
            "finals": list(self.finals),
        }


@dataclass(frozen=True)
class PhaseResult:
    """One assessment phase of a tuning strategy.

    Attributes:
        phase: Phase label (also the seed stream name)
        grid: Grid assessed in this phase
        results: One result per configuration, in config_index order
        fc_summary: Five-number summary of F_C over the results
        group_means: Per parameter, (value, mean F_C) in value order
        influences: Spread of the group means per parameter
        fixed: Parameters fixed after this phase and their values
        dropped: Values removed after this phase per parameter
    """

    phase: str
    grid: ParameterGrid
    results: tuple[ConfigResult, ...]
    fc_summary: FiveNumber
    group_means: dict[str, tuple[tuple[Any, float], ...]] = field(
        default_factory=dict
    )
    influences: dict[str, float] = field(default_factory=dict)
    fixed: dict[str, Any] = field(default_factory=dict)
    dropped: dict[str, tuple[Any, ...]] = field(default_factory=dict)

    def best(self) -> ConfigResult:
        """Lowest F_C, ties toward the lowest config_index."""
        return min(
            self.results, key=lambda r: (r.utility.F_C, r.config_index)
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "phase": self.phase,
            "grid": self.grid.to_dict(),
            "fc_summary": self.fc_summary.to_dict(),
            "group_means": {
                name: [{"value": v, "mean_F_C": m} for v, m in means]
                for name, means in self.group_means.items()
            },
            "influences": dict(self.influences),
            "fixed": dict(self.fixed),
            "dropped": {k: list(v) for k, v in self.dropped.items()},
            "results": [r.to_dict() for r in self.results],
        }


@dataclass(frozen=True)
class ValidationSummary:
    """Fresh-seed validation of a tuned configuration.

    Attributes:
        runs: Number of validation runs
        final_fitness: Five-number summary of the final best fitnesses
        mean_final: Mean final best fitness
        utility: Utilities of the validation APC
        apc: Validation APC
        finals: Final best fitness of each run
        optimum: Reference optimum, if one was supplied
        success_rate: Fraction of runs within tolerance of the optimum
        tolerance: Success tolerance
    """

    runs: int
    final_fitness: FiveNumber
    mean_final: float
    utility: UtilityReport
    apc: APC
    finals: tuple[float, ...]
    optimum: float | None = None
    success_rate: float | None = None
    tolerance: float = 1e-9

    def __post_init__(self) -> None:
        if self.runs < 1:
            raise TuningError(f"validation needs runs >= 1, got {self.runs}")

    def to_dict(self) -> dict[str, Any]:
        return {
            "runs": self.runs,
            "final_fitness": self.final_fitness.to_dict(),
            "mean_final": self.mean_final,
            "utility": self.utility.to_dict(),
            "apc": self.apc.to_dict(),
            "finals": list(self.finals),
            "optimum": self.optimum,
            "success_rate": self.success_rate,
            "tolerance": self.tolerance,
        }


@dataclass(frozen=True)
class TuningReport:
    """Outcome of a tuning strategy.

    Attributes:
        method: Tuned optimizer
        strategy: 1 (single grid pick) or 2 (phased control)
        master_seed: Seed all phase streams derive from
        phases: Assessment phases in execution order
        best: Best configuration of the final phase
        runs_executed: Optimizer runs spent, validation included
        validation: Optional fresh-seed validation of ``best``
    """

    method: MethodName
    strategy: int
    master_seed: int
    phases: tuple[PhaseResult, ...]
    best: ConfigResult
    runs_executed: int
    validation: ValidationSummary | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "method": MethodName(self.method).value,
            "strategy": self.strategy,
            "master_seed": self.master_seed,
            "runs_executed": self.runs_executed,
            "best": self.best.to_dict(),
            "validation": (
                None if self.validation is None else self.validation.to_dict()
            ),
            "phases": [p.to_dict() for p in self.phases],
        }

    def to_frame(self) -> pd.DataFrame:
        """One row per assessed configuration per phase."""
        rows = []
        for phase in self.phases:
            for result in phase.results:
                rows.append(
                    {
                        "phase": phase.phase,
                        "config_index": result.config_index,
                        **result.parameters,
                        "F_C": result.utility.F_C,
                        "F_A": result.utility.F_A,
                        "F_B": result.utility.F_B,
                    }
                )
        return pd.DataFrame(rows)
