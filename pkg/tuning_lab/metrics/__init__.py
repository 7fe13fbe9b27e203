"""Average performance curves, utilities and summary statistics."""

from .protocols import APC, FiveNumber, UtilityReport
from .statistics import five_number, mann_whitney_less, success_rate
from .utilities import (
    DEFAULT_INTERVALS,
    DEFAULT_Z_L,
    compute_apc,
    sample_points,
    utility_area,
    utility_fa,
    utility_fb,
    utility_fc,
)

__all__ = [
    # Types
    "APC",
    "FiveNumber",
    "UtilityReport",
    # Utilities
    "DEFAULT_INTERVALS",
    "DEFAULT_Z_L",
    "compute_apc",
    "sample_points",
    "utility_area",
    "utility_fa",
    "utility_fb",
    "utility_fc",
    # Statistics
    "five_number",
    "mann_whitney_less",
    "success_rate",
]
