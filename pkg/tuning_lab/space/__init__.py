"""Discrete search spaces and the genotype encoding."""

from .encoding import (
    cardinality,
    decode,
    decode_many,
    embed,
    random_genotype,
    snap,
    snap_many,
)
from .protocols import (
    MAX_CARDINALITY,
    DiscreteSpace,
    Genotype,
    IndexVector,
    ValueGrid,
)

__all__ = [
    # Types
    "DiscreteSpace",
    "Genotype",
    "IndexVector",
    "MAX_CARDINALITY",
    "ValueGrid",
    # Encoding
    "cardinality",
    "decode",
    "decode_many",
    "embed",
    "random_genotype",
    "snap",
    "snap_many",
]
