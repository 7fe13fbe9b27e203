"""Parameter grid presets and enumeration."""

import itertools
import logging
from typing import Any

from ..optimizers import MethodName, OptimizerConfig, parse_config
from .protocols import GRID_PARAMETERS, ParameterGrid

logger = logging.getLogger(__name__)

_FULL_VALUES: dict[MethodName, dict[str, tuple[Any, ...]]] = {
    MethodName.GA_ELITIST: {
        "PopSize": (50, 100, 150, 200),
        "ECountFract": (0.05, 0.10, 0.15, 0.20),
        "CrossFract": (0.7, 0.8, 0.9, 1.0),
        "SelFn": (
            "stochunif",
            "remainder",
            "uniform",
            "roulette",
            "tournament",
        ),
        "CrossFn": (
            "scattered",
            "intermediate",
            "heuristic",
            "singlepoint",
            "twopoints",
            "arithmetic",
        ),
    },
    MethodName.GA_YPEA: {
        "PopSize": (50, 100, 150, 200),
        "CrossProb": (0.6, 0.7, 0.8, 0.9),
        "CrossInfl": (0.1, 0.2, 0.3, 0.4),
        "MutRate": (0.1, 0.2, 0.3, 0.4),
        "MutStepSize": (0.05, 0.1, 0.15, 0.2),
        "SelPress": (1, 3, 5),
    },
    MethodName.PSO: {
        "SwarmSize": (50, 100, 150, 200),
        "MinFractNeigh": (0.1, 0.2, 0.3, 0.4),
        "SelfAdj": (0.5, 1.0, 1.49, 1.99),
        "SocialAdj": (0.5, 1.0, 1.49, 1.99),
    },
    MethodName.BBO: {
        "PopSize": (50, 80, 100, 120, 140),
        "Alpha": (0.9, 0.95, 0.99),
        "MutProb": (0.3, 0.4, 0.5),
        "MutStepSize": (0.025, 0.05, 0.075, 0.1),
        "MutStepSizeDamp": (0.99, 1.0, 1.01, 1.02),
    },
}


def full_grid(
    method: MethodName | str, constants: dict[str, Any] | None = None
) -> ParameterGrid:
    """Full default grid of a method."""
    method = MethodName(method)
    values = _FULL_VALUES[method]
    return ParameterGrid(
        method=method,
        parameters=tuple(
            (name, values[name]) for name in GRID_PARAMETERS[method]
        ),
        constants=dict(constants or {}),
    )


FULL_GRIDS: dict[MethodName, ParameterGrid] = {
    method: full_grid(method) for method in MethodName
}


def desk_grid(
    method: MethodName | str, constants: dict[str, Any] | None = None
) -> ParameterGrid:
    """Desk-scale grid: every other default value of each parameter."""
    full = full_grid(method, constants)
    return ParameterGrid(
        method=full.method,
        parameters=tuple(
            (name, values[::2]) for name, values in full.parameters
        ),
        constants=dict(full.constants),
    )


def enumerate_grid(grid: ParameterGrid) -> list[OptimizerConfig]:
    """All configurations of a grid in lexicographic order.

    The first parameter varies slowest and values follow their listed
    order, so the position in the list is a stable config_index.

    Raises:
        pydantic.ValidationError: If a combination is not a valid
            configuration
    """
    names = grid.names
    configs = [
        parse_config(
            {
                "method": grid.method.value,
                **grid.constants,
                **dict(zip(names, combo)),
            }
        )
        for combo in itertools.product(*(v for _, v in grid.parameters))
    ]
    logger.debug(
        f"Enumerated {len(configs)} {grid.method.value} configurations"
    )
    return configs
