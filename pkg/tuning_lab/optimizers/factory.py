"""Construction of optimizers from method configurations."""

import logging
from typing import Any

from ..objectives import ObjectiveSpec
from .base import BaseOptimizer
from .bbo import Bbo
from .ga_elitist import GaElitist, offspring_counts
from .ga_ypea import GaYpea
from .protocols import (
    BboConfig,
    GaElitistConfig,
    GaYpeaConfig,
    OptimizerConfig,
    PsoConfig,
    RunTrace,
    parse_config,
)
from .pso import Pso

logger = logging.getLogger(__name__)

_OPTIMIZERS: dict[type, type[BaseOptimizer]] = {
    GaElitistConfig: GaElitist,
    GaYpeaConfig: GaYpea,
    PsoConfig: Pso,
    BboConfig: Bbo,
}


class OptimizerFactory:
    """Factory for creating optimizers."""

    @staticmethod
    def create(
        config: OptimizerConfig | dict[str, Any], spec: ObjectiveSpec
    ) -> BaseOptimizer:
        """Create the optimizer of a configuration.

        Args:
            config: Validated configuration or method-tagged mapping
            spec: Objective to minimize

        Returns:
            Optimizer ready to run

        Raises:
            pydantic.ValidationError: If a mapping fails validation
            ValueError: If the configuration type is unknown
        """
        if isinstance(config, dict):
            config = parse_config(config)
        try:
            optimizer_cls = _OPTIMIZERS[type(config)]
        except KeyError:
            raise ValueError(
                f"unsupported optimizer configuration: {type(config)}"
            ) from None
        logger.debug(
            f"Creating {optimizer_cls.__name__} with {config.parameters()}"
        )
        return optimizer_cls(config, spec)


def run(
    config: OptimizerConfig | dict[str, Any],
    spec: ObjectiveSpec,
    budget: int,
    seed: int,
) -> RunTrace:
    """Run one seeded optimization.

    Args:
        config: Method configuration
        spec: Objective to minimize
        budget: Iterations after the initial population (>= 1)
        seed: Seed of the run's random stream

    Returns:
        Best-so-far trace of length budget + 1
    """
    optimizer = OptimizerFactory.create(config, spec)
    return optimizer.run(budget, seed)


def expected_evaluations(config: OptimizerConfig, budget: int) -> int:
    """Exact objective evaluations of a run of ``config``.

    GaElitist spends P + budget*(P - elite) since elite keep their
    fitness; the other methods spend P*(budget + 1).
    """
    size = config.population_size
    if isinstance(config, GaElitistConfig):
        n_elite, _, _ = offspring_counts(config)
        return size + budget * (size - n_elite)
    return size * (budget + 1)
