"""Discrete surrogate objectives and the enumeration oracle."""

from .benchmarks import ackley, eggholder2, eggholder_nd
from .loaders import BaseTableLoader, TableCSVLoader, load_table, save_table
from .oracle import DEFAULT_ORACLE_LIMIT, brute_force_optimum
from .protocols import (
    Evaluation,
    ObjectiveKind,
    ObjectiveSpec,
    OracleResult,
    PenaltyRule,
)
from .surrogates import (
    benchmark_objective,
    evaluate,
    evaluate_many,
    table_objective,
)

__all__ = [
    # Types
    "Evaluation",
    "ObjectiveKind",
    "ObjectiveSpec",
    "OracleResult",
    "PenaltyRule",
    # Benchmarks
    "ackley",
    "eggholder2",
    "eggholder_nd",
    # Surrogates
    "benchmark_objective",
    "evaluate",
    "evaluate_many",
    "table_objective",
    # Tables
    "BaseTableLoader",
    "TableCSVLoader",
    "load_table",
    "save_table",
    # Oracle
    "DEFAULT_ORACLE_LIMIT",
    "brute_force_optimum",
]
