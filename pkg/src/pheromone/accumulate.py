"""
Atomic-style deposit: one thread per tour position adds directly into tau.
"""
import logging
from concurrent.futures import Executor
from typing import Optional, Tuple

import numpy as np

from src.models.aco_models import DepositVariant
from src.models.problem import PheromoneMatrix, ProblemInstance
from src.pheromone.base import DepositKernel, map_ordered
from src.pheromone.ledger import AccessLedger
from src.pheromone.tour_buffer import TourBuffer

logger = logging.getLogger(__name__)

# Ants per partial buffer. Fixed, so the merge order never depends on the worker count.
ANT_CHUNK = 16


class AccumulateKernel(DepositKernel):
    """
    Every edge word issues an atomic add: tau[a][b] and tau[b][a] both receive 1/C^k.

    Ants are split into fixed chunks; each chunk sums its deposits per cell in
    ant-major order and the chunk partials are added to tau in chunk order.
    """

    variant = DepositVariant.ACCUMULATE

    def get_name(self) -> str:
        return "Accumulate"

    def _deposit(
        self,
        tau: np.ndarray,
        tours: TourBuffer,
        ledger: AccessLedger,
        executor: Optional[Executor],
    ) -> None:
        n = tau.shape[0]

        def partial(start: int) -> Tuple[np.ndarray, np.ndarray, AccessLedger]:
            first, second, deposits = tours.edges(start, start + ANT_CHUNK)
            rows = np.column_stack((first, second)).ravel()
            cols = np.column_stack((second, first)).ravel()
            values = np.repeat(deposits, 2)
            cells, slot = np.unique(rows * n + cols, return_inverse=True)
            sums = np.zeros(cells.size, dtype=np.float64)
            np.add.at(sums, slot, values)
            local = AccessLedger(global_loads=values.size, atomic_ops=values.size)
            return cells, sums, local

        for cells, sums, local in map_ordered(partial, range(0, tours.m, ANT_CHUNK), executor):
            tau[cells // n, cells % n] += sums
            ledger.merge(local)
        logger.debug("accumulate: %d atomic adds", ledger.atomic_ops)


def deposit_accumulate(
    tau: PheromoneMatrix,
    tours: TourBuffer,
    problem: Optional[ProblemInstance] = None,
    ledger: Optional[AccessLedger] = None,
) -> PheromoneMatrix:
    """Deposit with atomic-style accumulation; counters are merged into ledger when given."""
    measured = AccumulateKernel().apply(tau, tours, problem)
    if ledger is not None:
        ledger.merge(measured)
    return tau
