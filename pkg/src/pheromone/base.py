"""
Base interface for pheromone deposit kernels.
"""
from abc import ABC, abstractmethod
from concurrent.futures import Executor
from typing import Callable, Iterable, Iterator, Optional, TypeVar

import numpy as np

from src.errors import ConfigError
from src.models.aco_models import DepositVariant, LedgerSnapshot
from src.models.problem import PheromoneMatrix, ProblemInstance
from src.pheromone.ledger import AccessLedger
from src.pheromone.tour_buffer import TourBuffer

T = TypeVar("T")
R = TypeVar("R")


def map_ordered(
    fn: Callable[[T], R], items: Iterable[T], executor: Optional[Executor] = None
) -> Iterator[R]:
    """Map on the executor when one is given; results always come back in input order."""
    if executor is None:
        return map(fn, items)
    return executor.map(fn, items)


class DepositKernel(ABC):
    """
    Abstract base class for deposit strategies.

    Subclasses implement _deposit, which adds every ant's 1/C^k to both
    orientations of each tour edge in place and records its accesses.
    """

    variant: DepositVariant

    def __init__(self, theta: int = 1):
        if theta < 1:
            raise ConfigError(f"tile size must be >= 1, got {theta}")
        self.theta = theta

    @abstractmethod
    def get_name(self) -> str:
        """Return the name of this kernel, as shown in verification reports."""
        pass

    @abstractmethod
    def _deposit(
        self,
        tau: np.ndarray,
        tours: TourBuffer,
        ledger: AccessLedger,
        executor: Optional[Executor],
    ) -> None:
        pass

    def apply(
        self,
        tau: PheromoneMatrix,
        tours: TourBuffer,
        problem: Optional[ProblemInstance] = None,
        executor: Optional[Executor] = None,
    ) -> AccessLedger:
        """
        Deposit pheromone for all tours in the buffer.

        Args:
            tau: Pheromone matrix, updated in place
            tours: Completed tours of this iteration
            problem: When given, stored tour lengths are checked against it first
            executor: Worker pool; None runs inline

        Returns:
            The access ledger of this invocation
        """
        if tours.n != tau.n:
            raise ConfigError(f"tour buffer is for n={tours.n}, pheromone matrix has n={tau.n}")
        if problem is not None:
            tours.check_lengths(problem)
        ledger = AccessLedger()
        self._deposit(tau.tau, tours, ledger, executor)
        return ledger

    def snapshot(self, ledger: AccessLedger, n: int, m: int) -> LedgerSnapshot:
        return ledger.snapshot(self.variant.value, n, m, self.theta)
