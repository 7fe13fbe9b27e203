"""Domain types of the performance metrics."""

from dataclasses import dataclass
from typing import Any

from ..exceptions import MetricError


@dataclass(frozen=True)
class APC:
    """Average performance curve of N runs.

    Attributes:
        mean_best: Pointwise mean of the best-so-far traces
        runs: Number of averaged traces (N)
    """

    mean_best: tuple[float, ...]
    runs: int

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "mean_best", tuple(float(v) for v in self.mean_best)
        )
        if self.runs < 1:
            raise MetricError(f"an APC needs N >= 1 runs, got {self.runs}")
        if len(self.mean_best) < 2:
            raise MetricError("an APC needs at least budget + 1 = 2 points")

    @property
    def budget(self) -> int:
        return len(self.mean_best) - 1

    def to_dict(self) -> dict[str, Any]:
        return {
            "mean_best": list(self.mean_best),
            "runs": self.runs,
            "budget": self.budget,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "APC":
        return cls(mean_best=tuple(data["mean_best"]), runs=data["runs"])


@dataclass(frozen=True)
class UtilityReport:
    """Utilities of one APC.

    Attributes:
        F_A: Final APC point (mean best fitness)
        B: Trapezoidal area under the sampled APC
        F_B: Area rescaled to fitness units, B/(n*b)
        F_C: (Z_l*F_A + F_B)/(1 + Z_l)
        n: Number of sampling intervals
        Z_l: Weight of F_A
        d: The n + 1 sampled APC points
    """

    F_A: float
    B: float
    F_B: float
    F_C: float
    n: int
    Z_l: float
    d: tuple[float, ...]

    def to_dict(self) -> dict[str, Any]:
        return {
            "F_A": self.F_A,
            "B": self.B,
            "F_B": self.F_B,
            "F_C": self.F_C,
            "n": self.n,
            "Z_l": self.Z_l,
            "d": list(self.d),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "UtilityReport":
        return cls(
            F_A=data["F_A"],
            B=data["B"],
            F_B=data["F_B"],
            F_C=data["F_C"],
            n=data["n"],
            Z_l=data["Z_l"],
            d=tuple(data["d"]),
        )


@dataclass(frozen=True)
class FiveNumber:
    """Box-plot statistics: whiskers at min/max, box at the quartiles."""

    min: float
    q25: float
    median: float
    q75: float
    max: float

    def __post_init__(self) -> None:
        values = self.as_tuple()
        if any(b < a for a, b in zip(values, values[1:])):
            raise MetricError(f"five-number summary not ordered: {values}")

    def as_tuple(self) -> tuple[float, float, float, float, float]:
        return (self.min, self.q25, self.median, self.q75, self.max)

    def to_dict(self) -> dict[str, float]:
        return {
            "min": self.min,
            "q25": self.q25,
            "median": self.median,
            "q75": self.q75,
            "max": self.max,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "FiveNumber":
        return cls(**{k: float(data[k]) for k in cls.__dataclass_fields__})
