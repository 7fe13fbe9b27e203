"""Grid tuning of optimizer parameters."""

from .assessment import Assessor, assess
from .grids import FULL_GRIDS, desk_grid, enumerate_grid, full_grid
from .protocols import (
    GRID_PARAMETERS,
    POPULATION_PARAMETERS,
    ConfigResult,
    ParameterGrid,
    PhaseResult,
    TuningReport,
    ValidationSummary,
)
from .seeds import SeedLedger, SeedStream, derive_seed
from .strategies import (
    DEFAULT_DROP_THRESHOLD,
    group_means,
    influence,
    tune_strategy1,
    tune_strategy2,
    validate,
)

__all__ = [
    # Types
    "ConfigResult",
    "ParameterGrid",
    "PhaseResult",
    "TuningReport",
    "ValidationSummary",
    # Grids
    "POPULATION_PARAMETERS",
    "FULL_GRIDS",
    "GRID_PARAMETERS",
    "desk_grid",
    "enumerate_grid",
    "full_grid",
    # Seeds
    "SeedLedger",
    "SeedStream",
    "derive_seed",
    # Assessment
    "Assessor",
    "assess",
    # Strategies
    "DEFAULT_DROP_THRESHOLD",
    "group_means",
    "influence",
    "tune_strategy1",
    "tune_strategy2",
    "validate",
]
