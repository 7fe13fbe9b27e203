"""Domain types and configuration models of the optimizers."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Annotated, Any, Literal, Union

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, model_validator

from ..space import Genotype, IndexVector


class MethodName(str, Enum):
    """Optimizer identifiers."""

    GA_ELITIST = "ga_elitist"
    GA_YPEA = "ga_ypea"
    PSO = "pso"
    BBO = "bbo"


class SelectionFn(str, Enum):
    """Parent selection schemes of the elitist GA."""

    STOCHUNIF = "stochunif"
    REMAINDER = "remainder"
    UNIFORM = "uniform"
    ROULETTE = "roulette"
    TOURNAMENT = "tournament"


class CrossoverFn(str, Enum):
    """Crossover operators of the elitist GA."""

    SCATTERED = "scattered"
    INTERMEDIATE = "intermediate"
    HEURISTIC = "heuristic"
    SINGLEPOINT = "singlepoint"
    TWOPOINTS = "twopoints"
    ARITHMETIC = "arithmetic"

    @classmethod
    def _missing_(cls, value: object) -> "CrossoverFn | None":
        if isinstance(value, str) and value.lower() == "sinpoint":
            return cls.SINGLEPOINT
        return None


class _OptimizerModel(BaseModel):
    """Common model settings: immutable, strict keys, alias names."""

    model_config = ConfigDict(
        frozen=True,
        extra="forbid",
        populate_by_name=True,
        use_enum_values=False,
    )

    @property
    def population_size(self) -> int:
        raise NotImplementedError

    def parameters(self) -> dict[str, Any]:
        """Parameter values keyed by their published names."""
        data = self.model_dump(by_alias=True, exclude={"method"})
        return {
            k: (v.value if isinstance(v, Enum) else v)
            for k, v in data.items()
        }


class GaElitistConfig(_OptimizerModel):
    """Elitist GA with scaled selection, crossover and Gaussian mutation."""

    method: Literal["ga_elitist"] = "ga_elitist"
    pop_size: int = Field(default=50, ge=2, alias="PopSize")
    ecount_fract: float = Field(default=0.05, ge=0, le=1, alias="ECountFract")
    cross_fract: float = Field(default=0.8, ge=0, le=1, alias="CrossFract")
    sel_fn: SelectionFn = Field(default=SelectionFn.STOCHUNIF, alias="SelFn")
    cross_fn: CrossoverFn = Field(
        default=CrossoverFn.SCATTERED, alias="CrossFn"
    )
    tournament_size: int = Field(default=4, ge=1, alias="TournamentSize")

    @property
    def population_size(self) -> int:
        return self.pop_size


class GaYpeaConfig(_OptimizerModel):
    """Non-elitist real-coded GA with roulette selection pressure."""

    method: Literal["ga_ypea"] = "ga_ypea"
    pop_size: int = Field(default=50, ge=2, alias="PopSize")
    cross_prob: float = Field(default=0.7, ge=0, le=1, alias="CrossProb")
    cross_infl: float = Field(default=0.2, ge=0, alias="CrossInfl")
    mut_rate: float = Field(default=0.1, ge=0, le=1, alias="MutRate")
    mut_step_size: float = Field(default=0.1, gt=0, alias="MutStepSize")
    sel_press: float = Field(default=1.0, ge=0, alias="SelPress")

    @property
    def population_size(self) -> int:
        return self.pop_size


class PsoConfig(_OptimizerModel):
    """Particle swarm with adaptive neighborhood size and inertia."""

    method: Literal["pso"] = "pso"
    swarm_size: int = Field(default=50, ge=2, alias="SwarmSize")
    min_fract_neigh: float = Field(
        default=0.25, gt=0, le=1, alias="MinFractNeigh"
    )
    self_adj: float = Field(default=1.49, ge=0, alias="SelfAdj")
    social_adj: float = Field(default=1.49, ge=0, alias="SocialAdj")
    inertia_range: tuple[float, float] = Field(
        default=(0.1, 1.1), alias="InertiaRange"
    )

    @model_validator(mode="after")
    def _check_inertia_range(self) -> "PsoConfig":
        low, high = self.inertia_range
        if low > high:
            raise ValueError(
                f"InertiaRange must be ordered (low <= high), got "
                f"{self.inertia_range}"
            )
        return self

    @property
    def population_size(self) -> int:
        return self.swarm_size


class BboConfig(_OptimizerModel):
    """Biogeography-based optimization with blended migration."""

    method: Literal["bbo"] = "bbo"
    pop_size: int = Field(default=50, ge=2, alias="PopSize")
    alpha: float = Field(default=0.9, ge=0, le=1, alias="Alpha")
    mut_prob: float = Field(default=0.3, ge=0, le=1, alias="MutProb")
    mut_step_size: float = Field(default=0.05, gt=0, alias="MutStepSize")
    mut_step_size_damp: float = Field(
        default=1.0, gt=0, alias="MutStepSizeDamp"
    )
    keep_rate: float = Field(default=0.2, ge=0, le=1, alias="KeepRate")

    @property
    def population_size(self) -> int:
        return self.pop_size


OptimizerConfig = Annotated[
    Union[GaElitistConfig, GaYpeaConfig, PsoConfig, BboConfig],
    Field(discriminator="method"),
]

_CONFIG_ADAPTER: TypeAdapter[OptimizerConfig] = TypeAdapter(OptimizerConfig)


def parse_config(data: dict[str, Any]) -> OptimizerConfig:
    """Validate a method-tagged parameter mapping.

    Args:
        data: Mapping with a ``method`` tag and published parameter names

    Returns:
        Validated configuration

    Raises:
        pydantic.ValidationError: If a value or key is invalid
    """
    return _CONFIG_ADAPTER.validate_python(data)


@dataclass(frozen=True)
class RunTrace:
    """Best-so-far fitness of one run.

    Attributes:
        best: Entry t is the best fitness seen up to iteration t
            (entry 0 is the best of the initial population)
        best_solution: Index vector of the final best fitness
        evaluations: Objective evaluations spent
    """

    best: tuple[float, ...]
    best_solution: IndexVector
    evaluations: int

    @property
    def budget(self) -> int:
        return len(self.best) - 1

    @property
    def final(self) -> float:
        return self.best[-1]


@dataclass
class Individual:
    """One member of a population.

    Attributes:
        genotype: Position in index coordinates
        fitness: Fitness of the snapped solution
        velocity: Particle velocity (swarm members only)
        personal_best: Best (genotype, fitness) seen (swarm members only)
    """

    genotype: Genotype
    fitness: float
    velocity: Genotype | None = None
    personal_best: tuple[Genotype, float] | None = None


@dataclass
class Population:
    """Population stored as row-aligned arrays.

    Attributes:
        genotypes: One genotype per row
        fitness: Fitness per row
        velocities: Particle velocities (swarms only)
        best_genotypes: Personal best positions (swarms only)
        best_fitness: Personal best fitness (swarms only)
    """

    genotypes: npt.NDArray[np.float64]
    fitness: npt.NDArray[np.float64]
    velocities: npt.NDArray[np.float64] | None = None
    best_genotypes: npt.NDArray[np.float64] | None = None
    best_fitness: npt.NDArray[np.float64] | None = field(default=None)

    def __len__(self) -> int:
        return int(self.genotypes.shape[0])

    def individual(self, i: int) -> Individual:
        """View row ``i`` as an Individual."""
        personal_best = None
        if self.best_genotypes is not None and self.best_fitness is not None:
            personal_best = (
                self.best_genotypes[i].copy(),
                float(self.best_fitness[i]),
            )
        return Individual(
            genotype=self.genotypes[i].copy(),
            fitness=float(self.fitness[i]),
            velocity=(
                None if self.velocities is None else self.velocities[i].copy()
            ),
            personal_best=personal_best,
        )

    def best(self) -> Individual:
        """Fittest member (lowest index on ties)."""
        return self.individual(int(np.argmin(self.fitness)))
