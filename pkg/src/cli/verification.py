"""
Cross-kernel equivalence check: every deposit kernel applied to the same tours.
"""
import itertools
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.engine.colony import AntSystem
from src.engine.worker_pool import ForkJoinPool
from src.models.aco_models import Parameters, RunConfig
from src.models.problem import ProblemInstance
from src.pheromone import (
    AccumulateKernel,
    DepositKernel,
    ScatterGatherKernel,
    SymmetricReductionKernel,
    TiledScatterGatherKernel,
    TourBuffer,
    evaporate,
    predicted_access_cost,
)

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-9


def default_kernels(theta: int) -> List[DepositKernel]:
    return [
        AccumulateKernel(theta),
        ScatterGatherKernel(theta),
        TiledScatterGatherKernel(theta),
        SymmetricReductionKernel(theta),
    ]


@dataclass
class PairResult:
    first: str
    second: str
    max_diff: float
    worst_cell: Tuple[int, int]
    tolerance: float = DEFAULT_TOLERANCE

    @property
    def passed(self) -> bool:
        return self.max_diff <= self.tolerance


@dataclass
class LedgerCheck:
    kernel: str
    measured: Tuple[int, int, int, int]
    predicted: Tuple[int, int, int, int]

    @property
    def passed(self) -> bool:
        return self.measured == self.predicted


@dataclass
class VerificationReport:
    pairs: List[PairResult]
    ledgers: List[LedgerCheck]

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.pairs) and all(c.passed for c in self.ledgers)

    def worst_pair(self) -> PairResult:
        return max(self.pairs, key=lambda p: p.max_diff)

    def suspects(self) -> List[str]:
        """Kernels present in every failing pair, plus kernels whose ledger is off."""
        failing = [{p.first, p.second} for p in self.pairs if not p.passed]
        common = set.intersection(*failing) if failing else set()
        common.update(c.kernel for c in self.ledgers if not c.passed)
        order = [c.kernel for c in self.ledgers]
        return [name for name in order if name in common]


def sample_tours(
    problem: ProblemInstance, parameters: Parameters, pool: ForkJoinPool
) -> Tuple[AntSystem, list]:
    """One construction phase plus evaporation, as the first iteration of a run would do."""
    config = RunConfig(parameters=parameters, workers=pool.workers, instance_path=Path(problem.name))
    colony = AntSystem(problem, config, pool)
    colony.iteration = 1
    ants, _ = colony.construct()
    evaporate(colony.tau, parameters.rho)
    return colony, ants


def verify_deposits(
    problem: ProblemInstance,
    parameters: Parameters,
    theta: int,
    kernels: Optional[Sequence[DepositKernel]] = None,
    workers: int = 1,
    tolerance: float = DEFAULT_TOLERANCE,
) -> VerificationReport:
    """
    Apply each kernel to a copy of the same evaporated matrix with the same tours.

    Args:
        problem: Problem instance
        parameters: Run parameters; seed selects the tours
        theta: Tile size for every kernel built here
        kernels: Kernels to compare, default one of each strategy
        workers: Worker count for construction and deposit
        tolerance: Largest accepted absolute cell difference

    Returns:
        VerificationReport with every pair and every ledger check
    """
    kernels = list(kernels) if kernels is not None else default_kernels(theta)
    matrices: Dict[str, np.ndarray] = {}
    ledgers: List[LedgerCheck] = []

    with ForkJoinPool(workers) as pool:
        colony, ants = sample_tours(problem, parameters, pool)
        n, m = colony.n, colony.m
        for kernel in kernels:
            tau = colony.tau.copy()
            tours = TourBuffer.from_ants(ants, n, kernel.theta)
            measured = kernel.snapshot(kernel.apply(tau, tours, problem, pool.executor), n, m)
            predicted = predicted_access_cost(kernel.variant, n, m, kernel.theta)
            ledgers.append(LedgerCheck(kernel.get_name(), measured.counters(), predicted.counters()))
            matrices[kernel.get_name()] = tau.tau

    pairs = []
    for first, second in itertools.combinations(matrices, 2):
        diff = np.abs(matrices[first] - matrices[second])
        cell = np.unravel_index(int(np.argmax(diff)), diff.shape)
        pairs.append(PairResult(first, second, float(diff[cell]), (int(cell[0]), int(cell[1])), tolerance))
        logger.debug("%s vs %s: max difference %.3g", first, second, pairs[-1].max_diff)
    return VerificationReport(pairs=pairs, ledgers=ledgers)
