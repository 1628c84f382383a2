"""
Gather-style deposit: one thread per matrix cell, each summing the edges that touch it.
"""
import logging
from concurrent.futures import Executor
from typing import Iterator, Optional, Tuple

import numpy as np

from src.models.aco_models import DepositVariant
from src.models.problem import PheromoneMatrix, ProblemInstance
from src.pheromone.base import DepositKernel, map_ordered
from src.pheromone.ledger import AccessLedger
from src.pheromone.tour_buffer import TourBuffer

logger = logging.getLogger(__name__)

# Matrix rows handled by one task of the untiled gather.
ROW_BLOCK = 32


def interleaved_cells(
    first: np.ndarray, second: np.ndarray, deposits: np.ndarray
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Both orientations of every edge, in edge order: (a,b), (b,a), (a',b'), ..."""
    rows = np.column_stack((first, second)).ravel()
    cols = np.column_stack((second, first)).ravel()
    return rows, cols, np.repeat(deposits, 2)


def staged_tiles(word_count: int, theta: int) -> Iterator[Tuple[int, int, int]]:
    """
    Walk the word stream tile by tile.

    Edge e occupies words 2e and 2e+1 and is complete once the tile holding
    word 2e+1 has been staged.

    Yields:
        (tile, first_edge, stop_edge) for every tile, including tiles that complete no edge
    """
    tiles = -(-word_count // theta)
    completing_tile = (2 * np.arange(word_count // 2) + 1) // theta
    bounds = np.searchsorted(completing_tile, np.arange(tiles + 1), side="left")
    for tile in range(tiles):
        yield tile, int(bounds[tile]), int(bounds[tile + 1])


def stage_tile(ledger: AccessLedger, threads: int, theta: int) -> None:
    """One global load per thread per tile, theta - 1 further reads from shared memory."""
    ledger.global_loads += threads
    ledger.shared_loads += threads * (theta - 1)


class ScatterGatherKernel(DepositKernel):
    """
    Untiled gather: each of the n*n cell threads reads every tour word from
    global memory and adds the deposits of the edges touching its cell.
    No atomics; every cell is written once.
    """

    variant = DepositVariant.SCATTER_GATHER

    def get_name(self) -> str:
        return "ScatterGather"

    def _deposit(
        self,
        tau: np.ndarray,
        tours: TourBuffer,
        ledger: AccessLedger,
        executor: Optional[Executor],
    ) -> None:
        n = tau.shape[0]
        rows, cols, values = interleaved_cells(*tours.edges())
        words = rows.size

        def gather(start: int) -> Tuple[int, np.ndarray, AccessLedger]:
            stop = min(start + ROW_BLOCK, n)
            delta = np.zeros((stop - start, n), dtype=np.float64)
            for offset, row in enumerate(range(start, stop)):
                # full scan of the word stream for every row
                hits = rows == row
                np.add.at(delta[offset], cols[hits], values[hits])
            cells = (stop - start) * n
            return start, delta, AccessLedger(global_loads=cells * words, global_stores=cells)

        for start, delta, local in map_ordered(gather, range(0, n, ROW_BLOCK), executor):
            tau[start : start + delta.shape[0]] += delta
            ledger.merge(local)


class TiledScatterGatherKernel(DepositKernel):
    """
    Gather with the tour words staged through shared memory theta words at a time.

    Per cell the deposits are summed in edge order, exactly as in the untiled
    gather, so both produce identical matrices for every theta.
    """

    variant = DepositVariant.SCATTER_GATHER_TILED

    def get_name(self) -> str:
        return "ScatterGatherTiled"

    def _deposit(
        self,
        tau: np.ndarray,
        tours: TourBuffer,
        ledger: AccessLedger,
        executor: Optional[Executor],
    ) -> None:
        n = tau.shape[0]
        first, second, deposits = tours.edges()
        threads = n * n
        delta = np.zeros_like(tau)
        for _, lo, hi in staged_tiles(2 * first.size, self.theta):
            stage_tile(ledger, threads, self.theta)
            if hi > lo:
                rows, cols, values = interleaved_cells(first[lo:hi], second[lo:hi], deposits[lo:hi])
                np.add.at(delta, (rows, cols), values)
        tau += delta
        ledger.global_stores += threads
        logger.debug("tiled gather: theta=%d, %d global loads", self.theta, ledger.global_loads)


def deposit_scatter_gather(
    tau: PheromoneMatrix,
    tours: TourBuffer,
    problem: Optional[ProblemInstance] = None,
    ledger: Optional[AccessLedger] = None,
) -> PheromoneMatrix:
    measured = ScatterGatherKernel().apply(tau, tours, problem)
    if ledger is not None:
        ledger.merge(measured)
    return tau


def deposit_scatter_gather_tiled(
    tau: PheromoneMatrix,
    tours: TourBuffer,
    theta: int,
    problem: Optional[ProblemInstance] = None,
    ledger: Optional[AccessLedger] = None,
) -> PheromoneMatrix:
    """Tiled gather deposit with tile size theta (words per tile)."""
    measured = TiledScatterGatherKernel(theta).apply(tau, tours, problem)
    if ledger is not None:
        ledger.merge(measured)
    return tau
