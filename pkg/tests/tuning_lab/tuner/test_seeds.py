"""Tests for run seed derivation."""

import pytest

from tuning_lab.exceptions import TuningError
from tuning_lab.tuner import SeedLedger, SeedStream, derive_seed


class TestDeriveSeed:
    """Test derive_seed."""

    def test_stable(self):
        """Test equal inputs give equal seeds."""
        assert derive_seed(7, "s1", 3, 4) == derive_seed(7, "s1", 3, 4)

    def test_64_bit(self):
        """Test seeds fit 64 bits."""
        seeds = [
            derive_seed(1, "p", c, r) for c in range(10) for r in range(10)
        ]

        assert all(0 <= s < 2**64 for s in seeds)
        assert len(set(seeds)) == 100

    @pytest.mark.parametrize(
        "other",
        [(8, "s1", 3, 4), (7, "s2", 3, 4), (7, "s1", 4, 4), (7, "s1", 3, 5)],
    )
    def test_every_component_matters(self, other):
        """Test changing any component changes the seed."""
        assert derive_seed(*other) != derive_seed(7, "s1", 3, 4)


class TestSeedStream:
    """Test SeedStream."""

    def test_matches_derive_seed(self):
        """Test a stream derives with its master seed and phase."""
        stream = SeedStream(11, "s2-phase1")

        assert stream.seed(2, 5) == derive_seed(11, "s2-phase1", 2, 5)


class TestSeedLedger:
    """Test SeedLedger."""

    def test_records(self):
        """Test seeds accumulate."""
        ledger = SeedLedger()

        ledger.record([1, 2])
        ledger.record([3])

        assert len(ledger) == 3

    def test_reuse(self):
        """Test a repeated seed is an error."""
        ledger = SeedLedger()
        ledger.record([1, 2])

        with pytest.raises(TuningError, match="already used"):
            ledger.record([5, 2])
