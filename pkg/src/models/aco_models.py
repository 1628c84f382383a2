"""
Pydantic models for instances, run configuration and reports.
"""
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, computed_field, field_validator, model_validator

REPORT_SCHEMA_VERSION = 1
MAX_SEED = 2**64 - 1


class EdgeWeightType(str, Enum):
    """Distance functions supported for node-coordinate instances."""
    EUC_2D = "EUC_2D"
    CEIL_2D = "CEIL_2D"
    ATT = "ATT"


class InstanceSpec(BaseModel):
    """Raw TSPLIB node-coordinate instance."""
    name: str = Field(description="Instance name from the NAME header")
    dimension: int = Field(description="Number of cities n")
    edge_weight_type: EdgeWeightType = Field(description="Distance function")
    coords: List[Tuple[float, float]] = Field(description="City coordinates, 0-based order")

    @model_validator(mode="after")
    def _check_shape(self) -> "InstanceSpec":
        if self.dimension < 2:
            raise ValueError("dimension must be at least 2")
        if len(self.coords) != self.dimension:
            raise ValueError(
                f"coords length {len(self.coords)} differs from dimension {self.dimension}"
            )
        return self


class Parameters(BaseModel):
    """Ant System parameters."""
    alpha: float = Field(default=1.0, description="Pheromone influence")
    beta: float = Field(default=2.0, description="Heuristic influence")
    rho: float = Field(default=0.5, description="Evaporation rate in (0, 1]")
    m: Optional[int] = Field(default=None, description="Ant count; None means one ant per city")
    nn: int = Field(default=30, description="Nearest-neighbour list length")
    iterations: int = Field(default=100, description="Number of iterations to run")
    seed: int = Field(default=42, description="64-bit RNG key")
    tile_size: int = Field(default=64, description="Tile size theta shared by the selection and deposit strategies")

    @field_validator("alpha", "beta")
    @classmethod
    def _non_negative(cls, value: float, info) -> float:
        if value < 0:
            raise ValueError(f"{info.field_name} must be >= 0")
        return value

    @field_validator("rho")
    @classmethod
    def _rho_range(cls, value: float) -> float:
        if not 0.0 < value <= 1.0:
            raise ValueError("rho must be in (0,1]")
        return value

    @field_validator("m")
    @classmethod
    def _ant_count(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and value < 1:
            raise ValueError("m must be >= 1")
        return value

    @field_validator("nn", "tile_size")
    @classmethod
    def _positive(cls, value: int, info) -> int:
        if value < 1:
            raise ValueError(f"{info.field_name} must be >= 1")
        return value

    @field_validator("iterations")
    @classmethod
    def _iterations(cls, value: int) -> int:
        if value < 1:
            raise ValueError("iterations must be >= 1")
        return value

    @field_validator("seed")
    @classmethod
    def _seed_range(cls, value: int) -> int:
        if not 0 <= value <= MAX_SEED:
            raise ValueError("seed must be a 64-bit unsigned integer")
        return value

    def ant_count(self, n: int) -> int:
        """Resolve m against the instance size."""
        return self.m if self.m is not None else n


class SelectionVariant(str, Enum):
    """Next-city selection schemes."""
    ROULETTE_FULL = "roulette"
    ROULETTE_RECOMPUTE = "roulette-recompute"
    ROULETTE_NN = "nn"
    DATA_PARALLEL_TILED = "data-parallel"


class DepositVariant(str, Enum):
    """Pheromone deposit schemes."""
    ACCUMULATE = "accumulate"
    SCATTER_GATHER = "scatter-gather"
    SCATTER_GATHER_TILED = "scatter-gather-tiled"
    SYMMETRIC_REDUCTION = "symmetric"


class SelectionStrategy(BaseModel):
    """Selection scheme plus its tile size."""
    variant: SelectionVariant = Field(default=SelectionVariant.ROULETTE_FULL)
    tile_size: int = Field(default=64, ge=1, description="Cities per tile (data-parallel only)")


class DepositStrategy(BaseModel):
    """Deposit scheme plus its tile size."""
    variant: DepositVariant = Field(default=DepositVariant.ACCUMULATE)
    tile_size: int = Field(default=64, ge=1, description="Words per tile (tiled variants only)")


class LedgerSnapshot(BaseModel):
    """Flat access-ledger record, one per kernel invocation."""
    strategy: str
    n: int
    m: int
    theta: int
    global_loads: int = 0
    global_stores: int = 0
    shared_loads: int = 0
    atomic_ops: int = 0

    @computed_field
    @property
    def loads_to_atomics(self) -> Optional[float]:
        """Global loads per atomic operation; None when no atomics were issued."""
        if self.atomic_ops == 0:
            return None
        return self.global_loads / self.atomic_ops

    def counters(self) -> Tuple[int, int, int, int]:
        return (self.global_loads, self.global_stores, self.shared_loads, self.atomic_ops)


class IterationRecord(BaseModel):
    """Outcome and instrumentation of one iteration."""
    iteration: int
    best_length: int = Field(description="Shortest tour built in this iteration")
    mean_length: float
    best_so_far: int
    construct_ms: float
    update_ms: float
    ledger: LedgerSnapshot = Field(description="Deposit kernel ledger")
    evaporation_ledger: LedgerSnapshot
    nn_fallbacks: int = 0
    zero_weight_fallbacks: int = 0


class RunConfig(BaseModel):
    """Everything needed to reproduce a run."""
    parameters: Parameters = Field(default_factory=Parameters)
    selection: SelectionStrategy = Field(default_factory=SelectionStrategy)
    deposit: DepositStrategy = Field(default_factory=DepositStrategy)
    workers: int = Field(default=1, ge=1)
    instance_path: Path
    random_start: bool = Field(default=False, description="Draw start cities instead of k mod n")

    @model_validator(mode="after")
    def _share_tile_size(self) -> "RunConfig":
        # parameters.tile_size is the run's only theta; both strategies follow it.
        theta = self.parameters.tile_size
        self.selection = self.selection.model_copy(update={"tile_size": theta})
        self.deposit = self.deposit.model_copy(update={"tile_size": theta})
        return self


TIMING_FIELDS = {"construct_ms", "update_ms"}


class RunReport(BaseModel):
    """Result of a complete run."""
    schema_version: int = REPORT_SCHEMA_VERSION
    instance: str
    n: int
    m: int
    seed: int
    config: RunConfig
    best_tour: List[int]
    best_length: int
    per_iteration: List[IterationRecord]

    def without_timings(self) -> Dict[str, Any]:
        """Report content that must be identical for identical (config, seed)."""
        payload = self.model_dump(mode="json")
        payload["config"].pop("workers", None)
        for record in payload["per_iteration"]:
            for key in TIMING_FIELDS:
                record.pop(key, None)
        return payload


class StrategyCombo(BaseModel):
    """One cell of a benchmark strategy grid."""
    selection: SelectionVariant
    deposit: DepositVariant
    theta: int = Field(ge=1)


class BenchmarkPlan(BaseModel):
    """Instances x strategies x repetitions."""
    instances: List[Path] = Field(min_length=1)
    grid: List[StrategyCombo] = Field(min_length=1)
    repetitions: int = Field(default=1, ge=1)
    base_seed: int = Field(default=42, ge=0)
    parameters: Parameters = Field(default_factory=Parameters)
    workers: int = Field(default=1, ge=1)

    def seed_for(self, repetition: int) -> int:
        return (self.base_seed + repetition) % (MAX_SEED + 1)
