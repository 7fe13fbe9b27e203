"""Pytest fixtures for tuning_lab tests."""

import pytest

from tuning_lab.objectives import benchmark_objective, table_objective
from tuning_lab.space import DiscreteSpace, ValueGrid


@pytest.fixture
def ackley_space():
    """Two variables with values -2..2, origin included."""
    return DiscreteSpace.uniform(2, -2.0, 2.0, 5)


@pytest.fixture
def ackley_spec(ackley_space):
    """Ackley surrogate whose optimum 0 sits at index (2, 2)."""
    return benchmark_objective("ackley", ackley_space)


@pytest.fixture
def constant_spec():
    """3x3 table surrogate with every entry 5.0."""
    space = DiscreteSpace.uniform(2, 0.0, 1.0, 3)
    table = {iv: 5.0 for iv in space.iter_indices()}
    return table_objective(space, table)


@pytest.fixture
def table3_spec():
    """3x3 table surrogate whose smallest entry is 0.5 at (2, 1)."""
    space = DiscreteSpace(
        grids=(
            ValueGrid.explicit((0, 1, 2)),
            ValueGrid.explicit((0, 1, 2)),
        )
    )
    table = {(i, j): 10.0 * i + j + 3.0 for i, j in space.iter_indices()}
    table[(2, 1)] = 0.5
    return table_objective(space, table)


@pytest.fixture
def eggholder_spec():
    """Small 3-variable Eggholder surrogate."""
    space = DiscreteSpace.uniform(3, -512.0, 512.0, 6)
    return benchmark_objective("eggholder", space)


def campaign_data(**overrides):
    """Small Ackley campaign: BBO run config and a PSO desk grid."""
    data = {
        "problem": {
            "objective": "ackley",
            "space": {"dimensions": 2, "lower": -2, "upper": 2, "count": 5},
        },
        "optimizer": {"method": "bbo", "PopSize": 6},
        "grid": {
            "method": "pso",
            "preset": "desk",
            "parameters": {"SwarmSize": [4, 6]},
        },
        "master_seed": 3,
        "runs": 2,
        "budget": 14,
        "intervals": 14,
        "workers": 1,
        "validation_runs": 2,
        "output": "out",
    }
    data.update(overrides)
    return data


@pytest.fixture
def campaign_file(write_yaml):
    """Write a small campaign with optional top-level overrides."""

    def _write(**overrides):
        return write_yaml(campaign_data(**overrides))

    return _write
