"""Campaign files: problem, method grid or configuration, and constants.

Example::

    name: eggholder16
    problem:
      objective: eggholder
      space: {dimensions: 16, lower: -512, upper: 512, count: 6}
    master_seed: 7
    strategy: 2
    grid:
      method: bbo
      preset: desk
    optimizer: {method: bbo, PopSize: 50}

Constants left out (runs, budget, intervals, ...) come from
:class:`~tuning_lab.config.LabSettings`.
"""

import logging
from pathlib import Path
from typing import Any, Literal

import yaml
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    ValidationError,
    model_validator,
)

from .config import LabSettings, get_settings
from .exceptions import CampaignConfigError, TuningError
from .objectives import (
    ObjectiveKind,
    ObjectiveSpec,
    PenaltyRule,
    benchmark_objective,
    load_table,
)
from .optimizers import MethodName, OptimizerConfig
from .space import DiscreteSpace, ValueGrid
from .tuner import ParameterGrid, desk_grid, full_grid

logger = logging.getLogger(__name__)

_SETTINGS_DEFAULTS = (
    "runs",
    "budget",
    "intervals",
    "z_l",
    "workers",
    "oracle_limit",
    "validation_runs",
    "drop_threshold",
    "tolerance",
)


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid")


class SpaceSection(_Section):
    """Either a homogeneous linear grid or explicit per-variable values."""

    dimensions: int | None = Field(default=None, ge=1)
    lower: float | None = None
    upper: float | None = None
    count: int | None = Field(default=None, ge=2)
    grids: list[list[float]] | None = None

    @model_validator(mode="after")
    def _check_form(self) -> "SpaceSection":
        linear = (self.dimensions, self.lower, self.upper, self.count)
        if self.grids is not None:
            if any(v is not None for v in linear):
                raise ValueError(
                    "space takes either grids or "
                    "dimensions/lower/upper/count, not both"
                )
        elif any(v is None for v in linear):
            raise ValueError(
                "space needs grids or all of dimensions, lower, upper, count"
            )
        self.build()
        return self

    def build(self) -> DiscreteSpace:
        if self.grids is not None:
            return DiscreteSpace(
                grids=tuple(ValueGrid.explicit(g) for g in self.grids)
            )
        assert self.dimensions is not None and self.count is not None
        assert self.lower is not None and self.upper is not None
        return DiscreteSpace.uniform(
            self.dimensions, self.lower, self.upper, self.count
        )


class PenaltySection(_Section):
    magnitude: float = Field(gt=0)
    infeasible: list[list[int]] = Field(default_factory=list)
    bound: float | None = None


class ProblemSection(_Section):
    """Objective of the campaign."""

    objective: ObjectiveKind
    space: SpaceSection | None = None
    table: Path | None = None
    penalty: PenaltySection | None = None

    @model_validator(mode="after")
    def _check_sources(self) -> "ProblemSection":
        if self.objective is ObjectiveKind.TABLE:
            if self.table is None:
                raise ValueError("a table objective needs a table path")
        else:
            if self.table is not None:
                raise ValueError(
                    f"{self.objective.value} objective takes no table"
                )
            if self.space is None:
                raise ValueError(f"{self.objective.value} needs a space")
        return self

    def build(self) -> ObjectiveSpec:
        """Create the objective (loads the table file if any)."""
        space = self.space.build() if self.space is not None else None
        if self.objective is ObjectiveKind.TABLE:
            assert self.table is not None
            magnitude = self.penalty.magnitude if self.penalty else None
            return load_table(self.table, space, magnitude)

        assert space is not None
        penalty = None
        if self.penalty is not None:
            penalty = PenaltyRule(
                magnitude=self.penalty.magnitude,
                infeasible=frozenset(
                    tuple(iv) for iv in self.penalty.infeasible
                ),
            )
        bound = self.penalty.bound if self.penalty is not None else None
        return benchmark_objective(
            self.objective, space, penalty, fitness_bound=bound
        )


class GridSection(_Section):
    """Grid preset plus per-parameter overrides."""

    method: MethodName
    preset: Literal["full", "desk"] = "full"
    parameters: dict[str, list[Any]] = Field(default_factory=dict)
    constants: dict[str, Any] = Field(default_factory=dict)

    def build(self) -> ParameterGrid:
        make = full_grid if self.preset == "full" else desk_grid
        grid = make(self.method, self.constants)
        for name, values in self.parameters.items():
            grid = grid.with_values(name, tuple(values))
        return grid


class CampaignConfig(_Section):
    """Validated campaign file."""

    name: str = "campaign"
    problem: ProblemSection
    optimizer: OptimizerConfig | None = None
    grid: GridSection | None = None
    strategy: Literal[1, 2] = 1
    master_seed: int = Field(default=0, ge=0, lt=2**64)
    output: Path = Path("results")
    optimum: float | None = None

    runs: int = Field(ge=1)
    budget: int = Field(ge=1)
    intervals: int = Field(ge=1)
    z_l: float = Field(ge=1.0)
    workers: int = Field(ge=1)
    oracle_limit: int = Field(ge=1)
    validation_runs: int = Field(ge=1)
    drop_threshold: float = Field(ge=0.0, le=1.0)
    tolerance: float = Field(ge=0.0)

    @model_validator(mode="after")
    def _check_budget(self) -> "CampaignConfig":
        if self.budget % self.intervals != 0:
            raise ValueError(
                f"budget {self.budget} must be divisible by the interval "
                f"count n={self.intervals}"
            )
        return self

    def build_grid(self) -> ParameterGrid:
        if self.grid is None:
            raise CampaignConfigError("campaign defines no grid to tune")
        try:
            return self.grid.build()
        except TuningError as e:
            raise CampaignConfigError(f"invalid grid: {e}") from e

    def require_optimizer(self) -> OptimizerConfig:
        if self.optimizer is None:
            raise CampaignConfigError(
                "campaign defines no optimizer configuration to run"
            )
        return self.optimizer


def load_campaign(
    path: str | Path,
    overrides: dict[str, Any] | None = None,
    settings: LabSettings | None = None,
) -> CampaignConfig:
    """Load and validate a campaign file.

    Relative table and output paths are resolved against the campaign
    file's directory. ``overrides`` (e.g. from the command line) win over
    the file, which wins over ``settings``.

    Args:
        path: YAML campaign file
        overrides: Values replacing top-level keys
        settings: Defaults of unset constants

    Returns:
        Validated campaign

    Raises:
        FileNotFoundError: If the campaign or its table file is missing
        CampaignConfigError: If the file is malformed or invalid
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"File not found: {path}")

    try:
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f)
    except yaml.YAMLError as e:
        raise CampaignConfigError(f"Invalid YAML in {path}: {e}") from e
    if not isinstance(data, dict):
        raise CampaignConfigError(f"{path} must contain a mapping")

    settings = settings or get_settings()
    for key in _SETTINGS_DEFAULTS:
        data.setdefault(key, getattr(settings, key))
    data.setdefault("name", path.stem)
    data.update({k: v for k, v in (overrides or {}).items() if v is not None})

    try:
        campaign = CampaignConfig.model_validate(data)
    except ValidationError as e:
        raise CampaignConfigError(f"Invalid campaign {path}:\n{e}") from e

    base = path.parent
    updates: dict[str, Any] = {}
    if (
        not campaign.output.is_absolute()
        and (overrides or {}).get("output") is None
    ):
        updates["output"] = base / campaign.output
    table = campaign.problem.table
    if table is not None:
        if not table.is_absolute():
            table = base / table
        if not table.exists():
            raise FileNotFoundError(f"File not found: {table}")
        updates["problem"] = campaign.problem.model_copy(
            update={"table": table}
        )
    if updates:
        campaign = campaign.model_copy(update=updates)

    logger.info(f"Loaded campaign {campaign.name} from {path}")
    return campaign
