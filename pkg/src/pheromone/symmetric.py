"""
Symmetric gather: only cells with i < j are computed, then mirrored.
"""
from concurrent.futures import Executor
from typing import Optional

import numpy as np

from src.models.aco_models import DepositVariant
from src.models.problem import PheromoneMatrix, ProblemInstance
from src.pheromone.base import DepositKernel
from src.pheromone.ledger import AccessLedger
from src.pheromone.scatter_gather import stage_tile, staged_tiles
from src.pheromone.tour_buffer import TourBuffer


def symmetric_threads(n: int) -> int:
    """Threads launched for the upper triangle: ceil(n^2 / 2)."""
    return -(-n * n // 2)


class SymmetricReductionKernel(DepositKernel):
    """
    Tiled gather over the upper triangle. Each thread writes its cell and the
    mirrored one, so n(n-1) cells are stored and the result is symmetric by
    construction.
    """

    variant = DepositVariant.SYMMETRIC_REDUCTION

    def get_name(self) -> str:
        return "SymmetricReduction"

    def _deposit(
        self,
        tau: np.ndarray,
        tours: TourBuffer,
        ledger: AccessLedger,
        executor: Optional[Executor],
    ) -> None:
        n = tau.shape[0]
        first, second, deposits = tours.edges()
        low, high = np.minimum(first, second), np.maximum(first, second)
        threads = symmetric_threads(n)
        upper = np.zeros_like(tau)
        for _, lo, hi in staged_tiles(2 * first.size, self.theta):
            stage_tile(ledger, threads, self.theta)
            if hi > lo:
                np.add.at(upper, (low[lo:hi], high[lo:hi]), deposits[lo:hi])
        tau += upper + upper.T
        ledger.global_stores += n * (n - 1)


def deposit_symmetric_reduction(
    tau: PheromoneMatrix,
    tours: TourBuffer,
    theta: int,
    problem: Optional[ProblemInstance] = None,
    ledger: Optional[AccessLedger] = None,
) -> PheromoneMatrix:
    measured = SymmetricReductionKernel(theta).apply(tau, tours, problem)
    if ledger is not None:
        ledger.merge(measured)
    return tau
