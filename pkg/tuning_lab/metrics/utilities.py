"""Average performance curve and the utilities derived from it.

The curve is sampled at n + 1 equally spaced iterations 0, b, ..., budget
(b = budget / n). F_A is the last sample, B the trapezoidal area under
the samples, F_B the area per unit of iteration span and F_C a weighted
combination of F_A and F_B used to rank configurations.
"""

import math
from collections.abc import Sequence

from ..exceptions import MetricError
from ..optimizers import RunTrace
from .protocols import APC, UtilityReport

DEFAULT_INTERVALS = 14
DEFAULT_Z_L = 4.0

TraceLike = RunTrace | Sequence[float]


def _points(trace: TraceLike) -> Sequence[float]:
    return trace.best if isinstance(trace, RunTrace) else trace


def compute_apc(traces: Sequence[TraceLike]) -> APC:
    """Average best-so-far traces pointwise.

    Each mean is an exactly rounded sum, so the result does not depend
    on trace order.

    Args:
        traces: Traces of equal length (RunTrace or plain sequences)

    Returns:
        Average performance curve

    Raises:
        MetricError: If the list is empty or lengths differ
    """
    if not traces:
        raise MetricError("cannot average an empty list of traces")

    points = [_points(t) for t in traces]
    length = len(points[0])
    if any(len(p) != length for p in points):
        raise MetricError(
            f"traces differ in length: {sorted({len(p) for p in points})}"
        )

    count = len(points)
    mean_best = tuple(
        math.fsum(p[t] for p in points) / count for t in range(length)
    )
    return APC(mean_best=mean_best, runs=count)


def sample_points(apc: APC, n: int = DEFAULT_INTERVALS) -> tuple[float, ...]:
    """The n + 1 APC points d_1..d_{n+1} at iterations 0, b, ..., budget.

    Raises:
        MetricError: If n < 1 or the budget is not divisible by n
    """
    if n < 1:
        raise MetricError(f"interval count must be >= 1, got {n}")
    if apc.budget % n != 0:
        raise MetricError(
            f"budget {apc.budget} must be divisible by the interval "
            f"count n={n}"
        )
    return apc.mean_best[:: apc.budget // n]


def utility_fa(apc: APC) -> float:
    """Final point of the APC (mean best fitness)."""
    return apc.mean_best[-1]


def utility_area(apc: APC, n: int = DEFAULT_INTERVALS) -> float:
    """Trapezoidal area B under the sampled APC."""
    d = sample_points(apc, n)
    b = apc.budget // n
    return math.fsum((d[i] + d[i + 1]) / 2.0 * b for i in range(n))


def utility_fb(apc: APC, n: int = DEFAULT_INTERVALS) -> float:
    """Area rescaled to fitness units, B/(n*b)."""
    d = sample_points(apc, n)
    return math.fsum((d[i] + d[i + 1]) / 2.0 for i in range(n)) / n


def utility_fc(
    apc: APC, n: int = DEFAULT_INTERVALS, z_l: float = DEFAULT_Z_L
) -> UtilityReport:
    """Compute every utility of an APC.

    Args:
        apc: Average performance curve
        n: Number of sampling intervals (budget must be divisible by it)
        z_l: Weight of F_A relative to F_B (>= 1)

    Returns:
        Report with F_A, B, F_B, F_C and the sampled points

    Raises:
        MetricError: If z_l < 1 or the budget is not divisible by n
    """
    if z_l < 1:
        raise MetricError(f"Z_l must be >= 1, got {z_l}")

    d = sample_points(apc, n)
    f_a = utility_fa(apc)
    f_b = utility_fb(apc, n)
    return UtilityReport(
        F_A=f_a,
        B=utility_area(apc, n),
        F_B=f_b,
        F_C=(z_l * f_a + f_b) / (1.0 + z_l),
        n=n,
        Z_l=z_l,
        d=d,
    )
