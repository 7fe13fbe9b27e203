"""Domain types of discrete surrogate objectives."""

from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import Enum
from types import MappingProxyType
from typing import Any

from ..exceptions import ObjectiveError
from ..space import DiscreteSpace, IndexVector


class ObjectiveKind(str, Enum):
    """Surrogate families."""

    ACKLEY = "ackley"
    EGGHOLDER = "eggholder"
    TABLE = "table"


@dataclass(frozen=True)
class PenaltyRule:
    """Additive penalty for infeasible solutions.

    Attributes:
        magnitude: Amount added to the raw fitness of infeasible solutions
        infeasible: Index vectors marked infeasible
        mode: Penalty mode; only additive penalties exist
    """

    magnitude: float
    infeasible: frozenset[IndexVector] = frozenset()
    mode: str = "additive"

    def __post_init__(self) -> None:
        if not self.magnitude > 0:
            raise ObjectiveError(
                f"penalty magnitude must be > 0, got {self.magnitude}"
            )
        if self.mode != "additive":
            raise ObjectiveError(f"unsupported penalty mode: {self.mode}")
        object.__setattr__(
            self,
            "infeasible",
            frozenset(tuple(int(i) for i in iv) for iv in self.infeasible),
        )

    def is_infeasible(self, indices: IndexVector) -> bool:
        return indices in self.infeasible


@dataclass(frozen=True)
class Evaluation:
    """Fitness of one discrete solution (lower is better)."""

    fitness: float
    feasible: bool = True


@dataclass(frozen=True, eq=False)
class ObjectiveSpec:
    """Discrete surrogate objective.

    Attributes:
        kind: Surrogate family
        space: Discrete space the objective is defined on
        table: Stored fitness per index vector (table surrogates only)
        penalty: Optional additive penalty rule
        literals: Fitness text as read from a table file, written back
            unchanged by save_table
    """

    kind: ObjectiveKind
    space: DiscreteSpace
    table: Mapping[IndexVector, float] | None = None
    penalty: PenaltyRule | None = None
    literals: Mapping[IndexVector, str] | None = field(
        default=None, repr=False
    )

    def __post_init__(self) -> None:
        kind = ObjectiveKind(self.kind)
        object.__setattr__(self, "kind", kind)

        if kind is ObjectiveKind.TABLE:
            if self.table is None:
                raise ObjectiveError("a table surrogate needs a table")
            object.__setattr__(
                self, "table", MappingProxyType(dict(self.table))
            )
            if self.literals is not None:
                object.__setattr__(self, "literals", dict(self.literals))
            self._check_table_penalty()
        elif self.table is not None or self.literals is not None:
            raise ObjectiveError(f"{kind.value} surrogate takes no table")

        if kind is ObjectiveKind.EGGHOLDER and self.space.n_vars < 2:
            raise ObjectiveError(
                "the Eggholder surrogate needs >= 2 variables"
            )

    def _check_table_penalty(self) -> None:
        """Check penalized entries stay worse than every feasible entry."""
        if self.penalty is None or self.table is None:
            return

        feasible = [
            f
            for iv, f in self.table.items()
            if not self.penalty.is_infeasible(iv)
        ]
        penalized = [
            f + self.penalty.magnitude
            for iv, f in self.table.items()
            if self.penalty.is_infeasible(iv)
        ]
        if feasible and penalized and min(penalized) <= max(feasible):
            raise ObjectiveError(
                f"penalty magnitude {self.penalty.magnitude} does not make "
                f"every infeasible entry worse than the feasible maximum "
                f"{max(feasible)}"
            )

    def __getstate__(self) -> dict[str, Any]:
        state = dict(self.__dict__)
        if state["table"] is not None:
            state["table"] = dict(state["table"])
        return state

    def __setstate__(self, state: dict[str, Any]) -> None:
        if state["table"] is not None:
            state["table"] = MappingProxyType(state["table"])
        self.__dict__.update(state)


@dataclass(frozen=True)
class OracleResult:
    """Outcome of the exhaustive enumeration.

    Attributes:
        indices: Minimizer (lexicographically smallest on ties)
        fitness: Minimum fitness
        cardinality: Number of enumerated solutions
        wall_time: Enumeration time in seconds
    """

    indices: IndexVector
    fitness: float
    cardinality: int
    wall_time: float = field(default=0.0, compare=False)

    def to_dict(self) -> dict[str, Any]:
        return {
            "indices": list(self.indices),
            "fitness": self.fitness,
            "cardinality": self.cardinality,
            "wall_time": self.wall_time,
        }
