"""Population-based metaheuristics over discrete surrogate objectives."""

from .base import BaseOptimizer
from .bbo import Bbo, bbo_step, migrate, migration_rates, mutation_sigma
from .crossover import crossover_elitist
from .evaluator import Evaluator, make_rng, round_half_up
from .factory import OptimizerFactory, expected_evaluations, run
from .ga_elitist import GaElitist, ga_elitist_step, mutation_scale
from .ga_ypea import (
    GaYpea,
    blend_crossover,
    blend_factors,
    ga_ypea_step,
    mutated_gene_count,
    selection_probabilities,
)
from .protocols import (
    BboConfig,
    CrossoverFn,
    GaElitistConfig,
    GaYpeaConfig,
    Individual,
    MethodName,
    OptimizerConfig,
    Population,
    PsoConfig,
    RunTrace,
    SelectionFn,
    parse_config,
)
from .pso import (
    Pso,
    SwarmState,
    neighborhood_size,
    pso_step,
    pso_velocity,
)
from .selection import rank_expectations, select

__all__ = [
    # Domain types
    "Individual",
    "Population",
    "RunTrace",
    # Configurations
    "BboConfig",
    "CrossoverFn",
    "GaElitistConfig",
    "GaYpeaConfig",
    "MethodName",
    "OptimizerConfig",
    "PsoConfig",
    "SelectionFn",
    "parse_config",
    # Infrastructure
    "BaseOptimizer",
    "Evaluator",
    "make_rng",
    "round_half_up",
    # Operators
    "crossover_elitist",
    "rank_expectations",
    "select",
    # Methods
    "Bbo",
    "GaElitist",
    "GaYpea",
    "Pso",
    "SwarmState",
    "bbo_step",
    "blend_crossover",
    "blend_factors",
    "ga_elitist_step",
    "ga_ypea_step",
    "migrate",
    "migration_rates",
    "mutated_gene_count",
    "mutation_scale",
    "mutation_sigma",
    "neighborhood_size",
    "pso_step",
    "pso_velocity",
    "selection_probabilities",
    # Factory
    "OptimizerFactory",
    "expected_evaluations",
    "run",
]
