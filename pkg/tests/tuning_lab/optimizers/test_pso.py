"""Tests for the particle swarm."""

import numpy as np

from tuning_lab.optimizers import (
    Evaluator,
    Pso,
    PsoConfig,
    SwarmState,
    make_rng,
    neighborhood_size,
    pso_step,
    pso_velocity,
)
from tuning_lab.optimizers.pso import adapt, initial_inertia


class TestNeighborhoodSize:
    """Test neighborhood_size."""

    def test_values(self):
        """Test floor(S * MinFractNeigh) with a floor of 1."""
        assert neighborhood_size(50, 0.10) == 5
        assert neighborhood_size(50, 0.25) == 12
        assert neighborhood_size(3, 0.10) == 1


class TestInitialInertia:
    """Test initial_inertia."""

    def test_top_of_range(self):
        """Test a positive range starts at its maximum."""
        assert initial_inertia((0.1, 1.1)) == 1.1

    def test_negative_range(self):
        """Test a negative range starts at its minimum."""
        assert initial_inertia((-0.5, 0.5)) == -0.5


class TestPsoVelocity:
    """Test pso_velocity."""

    def test_pure_social_pull(self):
        """Test W=0, y1=0, y2=1, u2=1 moves onto the neighborhood best."""
        v = np.array([3.0, -2.0])
        x = np.array([1.0, 1.0])
        p = np.array([0.5, 4.0])
        g = np.array([2.0, -1.0])

        new = pso_velocity(
            v, x, p, g, 0.0, 0.0, 1.0, np.array([0.3, 0.9]), np.ones(2)
        )

        np.testing.assert_array_equal(new, g - x)


class TestAdapt:
    """Test adapt."""

    def _state(self, stall, inertia, size=4):
        return SwarmState(
            min_neighborhood=2,
            neighborhood_size=size,
            stall=stall,
            inertia=inertia,
            best_fitness=0.0,
        )

    def test_long_stall_halves_inertia(self):
        """Test no improvement beyond the stall limit halves W."""
        state = self._state(stall=5, inertia=1.1)

        adapt(state, False, PsoConfig(SwarmSize=10))

        assert state.stall == 6
        assert state.inertia == 0.55
        assert state.neighborhood_size == 6

    def test_neighborhood_capped(self):
        """Test the neighborhood never exceeds the swarm."""
        state = self._state(stall=3, inertia=0.5, size=9)

        adapt(state, False, PsoConfig(SwarmSize=10))

        assert state.neighborhood_size == 10

    def test_improvement_resets_neighborhood(self):
        """Test improvement shrinks N back to its minimum."""
        state = self._state(stall=6, inertia=0.55, size=8)

        adapt(state, True, PsoConfig(SwarmSize=10))

        assert state.stall == 5
        assert state.neighborhood_size == 2
        assert state.inertia == 0.55

    def test_short_stall_doubles_inertia_within_range(self):
        """Test W doubles and is clipped to the range."""
        state = self._state(stall=1, inertia=0.7)

        adapt(state, True, PsoConfig(SwarmSize=10))

        assert state.stall == 0
        assert state.inertia == 1.1


class TestPsoStep:
    """Test pso_step."""

    def test_velocity_bounded(self, eggholder_spec):
        """Test velocities stay within the index ranges."""
        config = PsoConfig(SwarmSize=8, InertiaRange=(1.1, 1.1))
        optimizer = Pso(config, eggholder_spec)
        rng = make_rng(3)
        evaluator = Evaluator(eggholder_spec)
        swarm = optimizer.initialize(evaluator, rng)
        limit = eggholder_spec.space.index_ranges

        for _ in range(5):
            swarm = pso_step(
                swarm, config, evaluator, optimizer._state, rng
            )
            assert np.all(np.abs(swarm.velocities) <= limit)

        assert evaluator.evaluations == 8 * 6

    def test_personal_bests_never_worsen(self, eggholder_spec):
        """Test personal bests only improve."""
        config = PsoConfig(SwarmSize=6)
        optimizer = Pso(config, eggholder_spec)
        rng = make_rng(4)
        evaluator = Evaluator(eggholder_spec)
        swarm = optimizer.initialize(evaluator, rng)

        nxt = pso_step(swarm, config, evaluator, optimizer._state, rng)

        assert np.all(nxt.best_fitness <= swarm.best_fitness)
        assert np.all(nxt.best_fitness <= nxt.fitness)


class TestPso:
    """Test Pso runs."""

    def test_evaluation_count(self, eggholder_spec):
        """Test every particle is evaluated each iteration."""
        optimizer = Pso(PsoConfig(SwarmSize=7), eggholder_spec)

        trace = optimizer.run(14, seed=1)

        assert trace.evaluations == 7 * 15
        assert trace.evaluations == optimizer.expected_evaluations(14)
