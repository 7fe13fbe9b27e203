"""Summary statistics and tests over utility samples."""

from collections.abc import Sequence

import numpy as np
from scipy.stats import mannwhitneyu

from ..exceptions import MetricError
from .protocols import FiveNumber


def five_number(values: Sequence[float]) -> FiveNumber:
    """Min, quartiles and max with linear interpolation of order statistics.

    Quartile p sits at fractional index h = (k - 1)*p of the sorted
    sample.

    Raises:
        MetricError: If values is empty
    """
    data = np.asarray(values, dtype=np.float64)
    if data.size == 0:
        raise MetricError("five-number summary of an empty sample")

    q25, median, q75 = np.percentile(data, [25, 50, 75], method="linear")
    return FiveNumber(
        min=float(data.min()),
        q25=float(q25),
        median=float(median),
        q75=float(q75),
        max=float(data.max()),
    )


def success_rate(
    finals: Sequence[float], optimum: float, tolerance: float = 1e-9
) -> float:
    """Fraction of final fitnesses within ``tolerance`` of the optimum."""
    data = np.asarray(finals, dtype=np.float64)
    if data.size == 0:
        raise MetricError("success rate of an empty sample")
    return float(np.mean(np.abs(data - optimum) <= tolerance))


def mann_whitney_less(a: Sequence[float], b: Sequence[float]) -> float:
    """One-sided Mann-Whitney p-value for "a tends to be lower than b"."""
    if len(a) == 0 or len(b) == 0:
        raise MetricError("Mann-Whitney test needs two non-empty samples")
    return float(mannwhitneyu(a, b, alternative="less").pvalue)
