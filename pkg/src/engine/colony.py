"""
The Ant System iteration loop.

Each iteration forks tour construction over the worker pool, joins, then
evaporates and deposits pheromone, recomputes the choice-info table and
updates the best-so-far tour. Construction and update never overlap.
"""
import logging
from enum import Enum
from pathlib import Path
from typing import List, Optional, Tuple

import numpy as np
from pydantic import ValidationError

from src.construction import (
    PheromoneWeights,
    SelectionStats,
    build_selector,
    construct_tour,
    new_ant,
    start_city,
)
from src.data.tsplib_loader import load_instance
from src.engine.worker_pool import ANT_CHUNK, ForkJoinPool, fixed_chunks
from src.errors import ConfigError, LedgerMismatchError
from src.models.aco_models import (
    IterationRecord,
    LedgerSnapshot,
    RunConfig,
    RunReport,
    SelectionVariant,
)
from src.models.ant import AntState
from src.models.problem import (
    ProblemInstance,
    build_nn_lists,
    build_problem,
    compute_choice_info,
    initial_pheromone,
    tour_length,
)
from src.pheromone import (
    EVAPORATION_STRATEGY,
    AccessLedger,
    TourBuffer,
    build_deposit_kernel,
    evaporate,
    evaporation_cost,
    predicted_access_cost,
)
from src.utils.timing import PhaseTimer

logger = logging.getLogger(__name__)


class Phase(Enum):
    IDLE = "idle"
    CONSTRUCTION = "construction"
    UPDATE = "update"


def check_ledger(measured: LedgerSnapshot, predicted: LedgerSnapshot) -> None:
    """
    Raises:
        LedgerMismatchError: if any counter differs
    """
    if measured.counters() != predicted.counters():
        raise LedgerMismatchError(
            f"{measured.strategy}: measured {measured.counters()} != predicted {predicted.counters()}"
        )


class AntSystem:
    """
    Engine state for one run: pheromone, choice-info, best-so-far and strategies.

    An instance is not shared between concurrent runs; separate runs use
    separate AntSystem objects.
    """

    def __init__(self, problem: ProblemInstance, config: RunConfig, pool: Optional[ForkJoinPool] = None):
        self.problem = problem
        self.config = config
        self.parameters = config.parameters
        self.n = problem.n
        self.m = self.parameters.ant_count(self.n)
        self.pool = pool or ForkJoinPool(1)

        self.nn_lists = None
        if config.selection.variant is SelectionVariant.ROULETTE_NN:
            self.nn_lists = build_nn_lists(problem, self.parameters.nn)
        self.tau = initial_pheromone(problem, self.m)
        self.choice = compute_choice_info(self.tau, problem, self.parameters.alpha, self.parameters.beta)
        weights = PheromoneWeights.of(self.tau, problem, self.parameters.alpha, self.parameters.beta)
        self.selector = build_selector(config.selection, self.nn_lists, weights)
        self.kernel = build_deposit_kernel(config.deposit)
        self.phase = Phase.IDLE
        self.iteration = 0
        self.best_tour: Optional[np.ndarray] = None
        self.best_length: Optional[int] = None

        if self.parameters.rho == 1.0:
            logger.warning("rho = 1 erases all pheromone every iteration")

    def _build_ants(self, chunk: range) -> Tuple[List[AntState], SelectionStats]:
        assert self.phase is Phase.CONSTRUCTION, f"construction during {self.phase.value}"
        stats = SelectionStats()
        ants = []
        for k in chunk:
            ant = new_ant(k, self.n, self.parameters.seed, self.iteration)
            start = start_city(ant, self.config.random_start)
            ants.append(construct_tour(self.problem, self.choice, self.nn_lists, self.selector, ant, start, stats))
        return ants, stats

    def construct(self) -> Tuple[List[AntState], SelectionStats]:
        """Fork m ant tasks in fixed ant-major chunks and join."""
        self.phase = Phase.CONSTRUCTION
        try:
            results = self.pool.fork(self._build_ants, fixed_chunks(self.m, ANT_CHUNK))
        finally:
            self.phase = Phase.IDLE
        ants: List[AntState] = []
        stats = SelectionStats()
        for chunk_ants, chunk_stats in results:
            ants.extend(chunk_ants)
            stats.merge(chunk_stats)
        return ants, stats

    def update(self, ants: List[AntState]) -> Tuple[LedgerSnapshot, LedgerSnapshot]:
        """Evaporate, deposit and refresh choice-info; returns (deposit, evaporation) ledgers."""
        assert self.phase is Phase.IDLE, f"update during {self.phase.value}"
        self.phase = Phase.UPDATE
        try:
            tours = TourBuffer.from_ants(ants, self.n, self.kernel.theta)
            evaporation = AccessLedger()
            evaporate(self.tau, self.parameters.rho, evaporation)
            deposit = self.kernel.apply(self.tau, tours, self.problem, self.pool.executor)
            self.choice = compute_choice_info(self.tau, self.problem, self.parameters.alpha, self.parameters.beta)
        finally:
            self.phase = Phase.IDLE

        deposit_snapshot = self.kernel.snapshot(deposit, self.n, self.m)
        check_ledger(deposit_snapshot, predicted_access_cost(self.config.deposit, self.n, self.m))
        evaporation_snapshot = evaporation.snapshot(EVAPORATION_STRATEGY, self.n, 0, 1)
        check_ledger(evaporation_snapshot, evaporation_cost(self.n))
        return deposit_snapshot, evaporation_snapshot

    def run_iteration(self) -> IterationRecord:
        """Construct m tours, update pheromone and record the outcome."""
        self.iteration += 1
        with PhaseTimer() as construct_timer:
            ants, stats = self.construct()
        with PhaseTimer() as update_timer:
            ledger, evaporation = self.update(ants)

        lengths = np.array([ant.length for ant in ants], dtype=np.int64)
        winner = int(np.argmin(lengths))
        if self.best_length is None or lengths[winner] < self.best_length:
            self.best_length = int(lengths[winner])
            self.best_tour = ants[winner].tour.copy()
            logger.debug("iteration %d: new best %d", self.iteration, self.best_length)

        return IterationRecord(
            iteration=self.iteration,
            best_length=int(lengths[winner]),
            mean_length=float(lengths.mean()),
            best_so_far=self.best_length,
            construct_ms=construct_timer.elapsed_ms,
            update_ms=update_timer.elapsed_ms,
            ledger=ledger,
            evaporation_ledger=evaporation,
            nn_fallbacks=stats.nn_fallbacks,
            zero_weight_fallbacks=stats.zero_weight_fallbacks,
        )


def run_problem(problem: ProblemInstance, config: RunConfig) -> RunReport:
    """Run config.parameters.iterations iterations on an already built problem."""
    with ForkJoinPool(config.workers) as pool:
        colony = AntSystem(problem, config, pool)
        records = [colony.run_iteration() for _ in range(config.parameters.iterations)]

    assert colony.best_length == tour_length(problem, colony.best_tour)
    logger.info(
        "%s: best length %d after %d iterations", problem.name, colony.best_length, len(records)
    )
    return RunReport(
        instance=problem.name,
        n=problem.n,
        m=colony.m,
        seed=config.parameters.seed,
        config=config,
        best_tour=[int(city) for city in colony.best_tour],
        best_length=colony.best_length,
        per_iteration=records,
    )


def make_run_config(instance_path: Path, **fields) -> RunConfig:
    """
    Build and validate a RunConfig.

    Raises:
        ConfigError: if any field violates its constraint
    """
    try:
        return RunConfig(instance_path=instance_path, **fields)
    except ValidationError as exc:
        messages = "; ".join(error["msg"].removeprefix("Value error, ") for error in exc.errors())
        raise ConfigError(messages) from exc


def run(config: RunConfig) -> RunReport:
    """
    Load the instance named by config and run the Ant System on it.

    Raises:
        InstanceIOError: if the instance file cannot be read
        TsplibError: if it is malformed
        ConfigError: if the configuration does not fit the instance
    """
    spec = load_instance(config.instance_path)
    problem = build_problem(spec)
    if config.selection.variant is SelectionVariant.ROULETTE_NN and config.parameters.nn >= problem.n:
        raise ConfigError(f"nn must be < n = {problem.n}, got {config.parameters.nn}")
    return run_problem(problem, config)
