"""
Base interface for next-city selection strategies.
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Optional

import numpy as np

from src.construction.rng import RngStream
from src.errors import AllVisitedError, ZeroTotalWeightError
from src.models.ant import TabuBitset
from src.models.problem import ChoiceInfo


@dataclass
class SelectionStats:
    """Fallback counters; owned by one worker, merged at the construction barrier."""
    nn_fallbacks: int = 0
    zero_weight_fallbacks: int = 0

    def merge(self, other: "SelectionStats") -> None:
        self.nn_fallbacks += other.nn_fallbacks
        self.zero_weight_fallbacks += other.zero_weight_fallbacks


def unvisited_or_raise(tabu: TabuBitset) -> np.ndarray:
    """Unvisited mask; AllVisitedError when it is empty."""
    mask = tabu.unvisited_mask()
    if not mask.any():
        raise AllVisitedError("every city has already been visited")
    return mask


def zero_weight_fallback(
    candidates: np.ndarray, stats: Optional[SelectionStats], strict: bool
) -> int:
    """Lowest-index candidate, taken when every candidate weight is zero."""
    if strict:
        raise ZeroTotalWeightError("all unvisited cities have zero weight")
    if stats is not None:
        stats.zero_weight_fallbacks += 1
    return int(candidates[0])


class Selector(ABC):
    """
    Abstract base class for selection strategies.
    A selector holds no per-ant state and may be shared by all workers.
    """

    strict: bool = False

    @abstractmethod
    def get_name(self) -> str:
        """Return the name of this strategy."""
        pass

    @abstractmethod
    def select(
        self,
        choice: ChoiceInfo,
        current: int,
        tabu: TabuBitset,
        stream: RngStream,
        stats: Optional[SelectionStats] = None,
    ) -> int:
        """
        Pick the next city.

        Args:
            choice: Choice-info table of the current iteration
            current: City the ant stands on
            tabu: Visited cities
            stream: The ant's RNG stream, already set to this step
            stats: Fallback counters of the calling worker

        Returns:
            An unvisited city index
        """
        pass
