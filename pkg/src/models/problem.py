"""
Problem matrices and the model operations shared by every strategy.
"""
import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from src.data.tsplib_loader import distance_matrix
from src.errors import (
    DistanceOverflowError,
    IndexOutOfRangeError,
    InvalidLengthError,
    NotAPermutationError,
    NotClosedError,
)
from src.models.aco_models import InstanceSpec

logger = logging.getLogger(__name__)

# Largest distance stored exactly by the float64 distance computation.
MAX_DISTANCE = 2**52
INT64_MAX = np.iinfo(np.int64).max
# Heuristic denominator for coincident cities (i != j, d_ij = 0).
COINCIDENT_DISTANCE = 0.1


@dataclass(frozen=True)
class ProblemInstance:
    """Symmetric distance matrix d and heuristic matrix eta = 1/d (zero diagonal)."""
    name: str
    dist: np.ndarray
    heuristic: np.ndarray

    @property
    def n(self) -> int:
        return self.dist.shape[0]


@dataclass
class PheromoneMatrix:
    """Trail values tau; one writer phase and one reader phase per iteration."""
    tau: np.ndarray

    @property
    def n(self) -> int:
        return self.tau.shape[0]

    def copy(self) -> "PheromoneMatrix":
        return PheromoneMatrix(self.tau.copy())

    def total(self) -> float:
        return float(self.tau.sum())


@dataclass(frozen=True)
class ChoiceInfo:
    """Precomputed tau^alpha * eta^beta table with zero diagonal."""
    value: np.ndarray


@dataclass(frozen=True)
class NearestNeighborLists:
    """Per-city candidate lists sorted by ascending distance, ties by lower index."""
    lists: np.ndarray

    @property
    def nn(self) -> int:
        return self.lists.shape[1]


def _readonly(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


def max_distance(n: int) -> int:
    """Largest distance for which any n-edge tour length still fits in int64."""
    return min(MAX_DISTANCE, INT64_MAX // n)


def build_problem(spec: InstanceSpec) -> ProblemInstance:
    """
    Build dense row-major distance and heuristic matrices for an instance.

    Raises:
        DistanceOverflowError: if n * max(d) does not fit the int64 tour sums
    """
    raw = distance_matrix(spec)
    limit = max_distance(spec.dimension)
    if not np.all(np.isfinite(raw)) or raw.max() > limit:
        raise DistanceOverflowError(
            f"distances of {spec.name} exceed {limit}, the int64 limit for {spec.dimension} cities"
        )
    dist = np.ascontiguousarray(raw.astype(np.int64))

    off_diagonal = ~np.eye(spec.dimension, dtype=bool)
    coincident = off_diagonal & (dist == 0)
    if coincident.any():
        logger.warning(
            "%s has %d coincident city pairs; using distance %.1f for their heuristic",
            spec.name, int(coincident.sum()) // 2, COINCIDENT_DISTANCE,
        )
    denominator = np.where(coincident, COINCIDENT_DISTANCE, dist.astype(np.float64))
    heuristic = np.zeros_like(denominator)
    np.divide(1.0, denominator, out=heuristic, where=off_diagonal)

    return ProblemInstance(name=spec.name, dist=_readonly(dist), heuristic=_readonly(heuristic))


def compute_choice_info(
    tau: PheromoneMatrix, problem: ProblemInstance, alpha: float, beta: float
) -> ChoiceInfo:
    """value[i][j] = tau[i][j]^alpha * eta[i][j]^beta off the diagonal, 0 on it."""
    value = np.power(tau.tau, alpha) * np.power(problem.heuristic, beta)
    np.fill_diagonal(value, 0.0)
    return ChoiceInfo(_readonly(value))


def build_nn_lists(problem: ProblemInstance, nn: int) -> NearestNeighborLists:
    """
    Nearest-neighbour lists of length nn.

    Raises:
        InvalidLengthError: unless 1 <= nn < n
    """
    n = problem.n
    if not 1 <= nn < n:
        raise InvalidLengthError(f"nn must be in [1, {n}), got {nn}")
    keyed = problem.dist.copy()
    # Push each city to the end of its own row.
    np.fill_diagonal(keyed, np.iinfo(np.int64).max)
    order = np.argsort(keyed, axis=1, kind="stable")
    return NearestNeighborLists(_readonly(np.ascontiguousarray(order[:, :nn])))


def greedy_tour(problem: ProblemInstance, start: int = 0) -> np.ndarray:
    """Deterministic nearest-neighbour tour from start; ties go to the lower index."""
    n = problem.n
    visited = np.zeros(n, dtype=bool)
    tour = np.empty(n + 1, dtype=np.int64)
    tour[0] = current = start
    visited[start] = True
    for step in range(1, n):
        row = np.where(visited, np.iinfo(np.int64).max, problem.dist[current])
        current = int(np.argmin(row))
        tour[step] = current
        visited[current] = True
    tour[n] = start
    return tour


def initial_pheromone(problem: ProblemInstance, m: int) -> PheromoneMatrix:
    """tau0 = m / C^nn everywhere, C^nn being the greedy tour length from city 0."""
    greedy_length = tour_length(problem, greedy_tour(problem, 0))
    tau0 = m / greedy_length if greedy_length > 0 else float(m)
    logger.debug("Greedy tour length %d, tau0 = %.6g", greedy_length, tau0)
    return PheromoneMatrix(np.full((problem.n, problem.n), tau0, dtype=np.float64))


def validate_tour(n: int, tour: Sequence[int]) -> np.ndarray:
    """
    Check that tour is a closed permutation of range(n).

    Raises:
        NotClosedError, NotAPermutationError, IndexOutOfRangeError
    """
    cities = np.asarray(tour, dtype=np.int64)
    if cities.ndim != 1 or cities.shape[0] != n + 1:
        raise NotAPermutationError(f"tour must have {n + 1} entries, got {cities.size}")
    if cities[0] != cities[-1]:
        raise NotClosedError(f"tour starts at {cities[0]} but ends at {cities[-1]}")
    body = cities[:-1]
    if body.min() < 0 or body.max() >= n:
        raise IndexOutOfRangeError(f"tour contains a city outside [0, {n})")
    if np.unique(body).size != n:
        raise NotAPermutationError("tour visits some city more than once")
    return cities


def tour_length(problem: ProblemInstance, tour: Sequence[int]) -> int:
    """Exact integer sum of consecutive edge distances of a closed tour."""
    cities = validate_tour(problem.n, tour)
    return int(problem.dist[cities[:-1], cities[1:]].sum())
