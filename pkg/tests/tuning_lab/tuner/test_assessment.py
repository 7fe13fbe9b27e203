"""Tests for N-run assessment."""

import pytest

from tuning_lab.exceptions import TuningError
from tuning_lab.objectives import table_objective
from tuning_lab.optimizers import BboConfig, PsoConfig, run
from tuning_lab.space import DiscreteSpace
from tuning_lab.tuner import (
    Assessor,
    SeedLedger,
    SeedStream,
    assess,
    desk_grid,
    enumerate_grid,
)

CONFIG = PsoConfig(SwarmSize=6)


class TestAssessorSettings:
    """Test Assessor construction."""

    def test_budget_divisible(self, ackley_spec):
        """Test budget 141 with n=14 is rejected."""
        with pytest.raises(TuningError, match="divisible"):
            Assessor(ackley_spec, runs=2, budget=141, intervals=14)

    @pytest.mark.parametrize(
        "kwargs", [{"runs": 0}, {"workers": 0}, {"intervals": 0}]
    )
    def test_positive_settings(self, ackley_spec, kwargs):
        """Test settings below 1 are rejected."""
        with pytest.raises(TuningError):
            Assessor(ackley_spec, budget=14, **kwargs)


class TestAssessor:
    """Test Assessor."""

    def test_single_run_apc_is_trace(self, eggholder_spec):
        """Test N=1 gives the single trace as APC."""
        stream = SeedStream(3, "t")
        assessor = Assessor(eggholder_spec, runs=1, budget=14)

        result = assessor.assess(CONFIG, stream)

        trace = run(CONFIG, eggholder_spec, 14, stream.seed(0, 0))
        assert result.apc.mean_best == trace.best
        assert result.seeds == (stream.seed(0, 0),)
        assert result.finals == (trace.final,)

    def test_constant_objective(self, constant_spec):
        """Test F_C equals the constant."""
        assessor = Assessor(constant_spec, runs=3, budget=14)

        results = assessor.assess_many(
            enumerate_grid(desk_grid("bbo")), SeedStream(1, "t")
        )

        assert {r.utility.F_C for r in results} == {5.0}
        assert [r.config_index for r in results] == list(range(len(results)))

    def test_reproducible(self, eggholder_spec):
        """Test re-running with the same stream is bit-identical."""
        stream = SeedStream(5, "t")

        a = Assessor(eggholder_spec, runs=4, budget=14).assess(CONFIG, stream)
        b = Assessor(eggholder_spec, runs=4, budget=14).assess(CONFIG, stream)

        assert a.to_dict() == b.to_dict()

    def test_seeds_from_stream(self, eggholder_spec):
        """Test run seeds follow (config_index, run_index)."""
        stream = SeedStream(9, "t")
        assessor = Assessor(eggholder_spec, runs=3, budget=14)

        result = assessor.assess(CONFIG, stream, config_index=4)

        assert result.seeds == tuple(stream.seed(4, r) for r in range(3))
        assert result.config_index == 4

    def test_counts_runs(self, eggholder_spec):
        """Test the executed-run counter."""
        assessor = Assessor(eggholder_spec, runs=2, budget=14)
        configs = [PsoConfig(SwarmSize=4), BboConfig(PopSize=4)]

        assessor.assess_many(configs, SeedStream(1, "t"))

        assert assessor.runs_executed == 4
        assert len(assessor.ledger) == 4

    def test_seed_reuse(self, eggholder_spec):
        """Test assessing twice on one stream reuses seeds."""
        assessor = Assessor(eggholder_spec, runs=2, budget=14)
        assessor.assess(CONFIG, SeedStream(1, "t"))

        with pytest.raises(TuningError, match="already used"):
            assessor.assess(CONFIG, SeedStream(1, "t"))

    def test_shared_ledger(self, eggholder_spec):
        """Test assessors sharing a ledger see each other's seeds."""
        ledger = SeedLedger()
        Assessor(eggholder_spec, 2, 14, ledger=ledger).assess(
            CONFIG, SeedStream(1, "t")
        )

        with pytest.raises(TuningError):
            Assessor(eggholder_spec, 2, 14, ledger=ledger).assess(
                CONFIG, SeedStream(1, "t")
            )

    def test_run_failure(self):
        """Test a failing run is reported with its configuration."""
        space = DiscreteSpace.uniform(2, 0.0, 1.0, 2)
        spec = table_objective(space, {(0, 0): 1.0})
        assessor = Assessor(spec, runs=1, budget=14)

        with pytest.raises(TuningError, match="config 0"):
            assessor.assess(CONFIG, SeedStream(1, "t"))

    def test_workers_do_not_change_results(self, eggholder_spec):
        """Test two workers give the same results as one."""
        configs = enumerate_grid(desk_grid("pso"))[:3]

        inline = Assessor(eggholder_spec, runs=2, budget=14, workers=1)
        pooled = Assessor(eggholder_spec, runs=2, budget=14, workers=2)

        a = inline.assess_many(configs, SeedStream(2, "t"))
        b = pooled.assess_many(configs, SeedStream(2, "t"))

        assert [r.to_dict() for r in a] == [r.to_dict() for r in b]
        assert pooled.runs_executed == 6


class TestAssess:
    """Test the standalone assess function."""

    def test_integer_seed(self, eggholder_spec):
        """Test an integer seed uses the ``assess`` stream."""
        result = assess(CONFIG, eggholder_spec, runs=2, budget=14, seed_base=8)

        assert result.seeds == (
            SeedStream(8, "assess").seed(0, 0),
            SeedStream(8, "assess").seed(0, 1),
        )
