"""Tests for optimizer configuration models and domain types."""

import numpy as np
import pytest
from pydantic import ValidationError

from tuning_lab.objectives import evaluate
from tuning_lab.optimizers import (
    BboConfig,
    CrossoverFn,
    Evaluator,
    GaElitistConfig,
    GaYpeaConfig,
    OptimizerFactory,
    Population,
    PsoConfig,
    RunTrace,
    SelectionFn,
    make_rng,
    parse_config,
)
from tuning_lab.space import snap


class TestParseConfig:
    """Test parse_config."""

    def test_dispatch_on_method(self):
        """Test the method tag selects the model."""
        config = parse_config({"method": "pso", "SwarmSize": 10})

        assert isinstance(config, PsoConfig)
        assert config.swarm_size == 10
        assert config.population_size == 10

    def test_field_names_accepted(self):
        """Test Python field names work as well as aliases."""
        config = parse_config({"method": "bbo", "pop_size": 12})

        assert config.population_size == 12

    def test_unknown_method(self):
        """Test an unknown tag is rejected."""
        with pytest.raises(ValidationError):
            parse_config({"method": "annealing"})

    def test_unknown_parameter(self):
        """Test extra keys are rejected."""
        with pytest.raises(ValidationError):
            parse_config({"method": "bbo", "Temperature": 3})

    @pytest.mark.parametrize(
        "data",
        [
            {"method": "ga_elitist", "PopSize": 1},
            {"method": "ga_elitist", "CrossFract": 1.5},
            {"method": "ga_ypea", "MutStepSize": 0},
            {"method": "pso", "MinFractNeigh": 0},
            {"method": "pso", "InertiaRange": [1.0, 0.5]},
            {"method": "bbo", "Alpha": -0.1},
        ],
    )
    def test_invalid_values(self, data):
        """Test out-of-range values are rejected."""
        with pytest.raises(ValidationError):
            parse_config(data)


class TestConfigs:
    """Test configuration models."""

    def test_defaults(self):
        """Test default values."""
        assert GaElitistConfig().pop_size == 50
        assert GaYpeaConfig().cross_prob == 0.7
        assert PsoConfig().inertia_range == (0.1, 1.1)
        assert BboConfig().keep_rate == 0.2

    def test_sinpoint_alias(self):
        """Test the short single-point spelling."""
        config = GaElitistConfig(CrossFn="sinpoint")

        assert config.cross_fn is CrossoverFn.SINGLEPOINT

    def test_parameters_use_table_names(self):
        """Test parameters() keys and enum values."""
        params = GaElitistConfig(SelFn="roulette").parameters()

        assert params["SelFn"] == "roulette"
        assert params["CrossFn"] == "scattered"
        assert params["PopSize"] == 50
        assert "method" not in params

    def test_frozen(self):
        """Test configurations are immutable."""
        config = BboConfig()

        with pytest.raises(ValidationError):
            config.pop_size = 10

    def test_selection_values(self):
        """Test every selection scheme parses."""
        for fn in SelectionFn:
            assert GaElitistConfig(SelFn=fn.value).sel_fn is fn


class TestRunTrace:
    """Test RunTrace."""

    def test_budget_and_final(self):
        """Test derived properties."""
        trace = RunTrace(
            best=(3.0, 2.0, 2.0), best_solution=(1,), evaluations=9
        )

        assert trace.budget == 2
        assert trace.final == 2.0


class TestPopulation:
    """Test Population member views."""

    @pytest.mark.parametrize(
        "config",
        [
            GaElitistConfig(PopSize=8),
            GaYpeaConfig(PopSize=8),
            PsoConfig(SwarmSize=8),
            BboConfig(PopSize=8),
        ],
        ids=lambda c: c.method,
    )
    def test_members_match_snapped_fitness(self, config, eggholder_spec):
        """Test each member's fitness is that of its snapped genotype."""
        optimizer = OptimizerFactory.create(config, eggholder_spec)
        evaluator = Evaluator(eggholder_spec)
        rng = make_rng(4)
        population = optimizer.initialize(evaluator, rng)
        for iteration in range(1, 4):
            population = optimizer.step(
                population, evaluator, rng, iteration, 3
            )

        for i in range(len(population)):
            member = population.individual(i)
            solution = snap(member.genotype, eggholder_spec.space)
            expected = evaluate(eggholder_spec, solution).fitness
            assert member.fitness == pytest.approx(expected)
            if config.method == "pso":
                assert member.velocity is not None
                _, best_fitness = member.personal_best
                assert best_fitness <= member.fitness
            else:
                assert member.velocity is None
                assert member.personal_best is None

    def test_best_is_first_minimum(self):
        """Test best() picks the lowest row index on ties."""
        population = Population(
            genotypes=np.array([[0.0], [1.0], [2.0]]),
            fitness=np.array([3.0, 1.0, 1.0]),
        )

        best = population.best()

        assert best.fitness == 1.0
        assert best.genotype.tolist() == [1.0]
