"""Run seed derivation.

A run seed is the first 8 bytes (little-endian) of the BLAKE2b digest of
``"<master_seed>:<phase>:<config_index>:<run_index>"``, so any single run
can be reproduced from those four values alone.
"""

import hashlib
from collections.abc import Iterable
from dataclasses import dataclass, field

from ..exceptions import TuningError


def derive_seed(
    master_seed: int, phase: str, config_index: int, run_index: int
) -> int:
    """Stable 64-bit seed of one run."""
    key = f"{master_seed}:{phase}:{config_index}:{run_index}".encode()
    digest = hashlib.blake2b(key, digest_size=8).digest()
    return int.from_bytes(digest, "little")


@dataclass(frozen=True)
class SeedStream:
    """Seeds of one phase of a campaign."""

    master_seed: int
    phase: str

    def seed(self, config_index: int, run_index: int) -> int:
        return derive_seed(
            self.master_seed, self.phase, config_index, run_index
        )


@dataclass
class SeedLedger:
    """Records every seed used by a campaign and rejects reuse."""

    seen: set[int] = field(default_factory=set)

    def record(self, seeds: Iterable[int]) -> None:
        """Add seeds to the ledger.

        Raises:
            TuningError: If any seed was used before
        """
        for seed in seeds:
            if seed in self.seen:
                raise TuningError(f"seed {seed} was already used")
            self.seen.add(seed)

    def __len__(self) -> int:
        return len(self.seen)
