"""
Padded tour array shared by every deposit kernel.
"""
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

from src.errors import ConfigError, InconsistentLengthError
from src.models.ant import AntState
from src.models.problem import ProblemInstance, tour_length


@dataclass(frozen=True)
class TourBuffer:
    """
    m tours, each padded with the sentinel city n to a multiple of theta entries.
    """
    tours: np.ndarray
    lengths: np.ndarray
    n: int
    theta: int = 1

    @classmethod
    def from_tours(
        cls,
        tours: Sequence[Sequence[int]],
        lengths: Sequence[int],
        n: int,
        theta: int = 1,
    ) -> "TourBuffer":
        if theta < 1:
            raise ConfigError(f"tile size must be >= 1, got {theta}")
        if len(tours) != len(lengths):
            raise ConfigError(f"{len(tours)} tours but {len(lengths)} lengths")
        padded = -(-(n + 1) // theta) * theta
        rows = np.full((len(tours), padded), n, dtype=np.int64)
        for k, tour in enumerate(tours):
            rows[k, : n + 1] = tour
        return cls(tours=rows, lengths=np.asarray(lengths, dtype=np.int64), n=n, theta=theta)

    @classmethod
    def from_ants(cls, ants: Iterable[AntState], n: int, theta: int = 1) -> "TourBuffer":
        ants = list(ants)
        return cls.from_tours([ant.tour for ant in ants], [ant.length for ant in ants], n, theta)

    @property
    def m(self) -> int:
        return self.tours.shape[0]

    @property
    def sentinel(self) -> int:
        return self.n

    @property
    def padded_length(self) -> int:
        return self.tours.shape[1]

    def check_lengths(self, problem: ProblemInstance) -> None:
        """
        Raises:
            InconsistentLengthError: if a stored C^k differs from the recomputed length
        """
        for k in range(self.m):
            actual = tour_length(problem, self.tours[k, : self.n + 1])
            if actual != self.lengths[k]:
                raise InconsistentLengthError(
                    f"ant {k}: stored length {self.lengths[k]} but tour measures {actual}"
                )

    def edges(
        self, start: int = 0, stop: Optional[int] = None
    ) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        Edges (a, b) with deposit 1/C^k, ant-major then position order.

        Pairs touching the sentinel are skipped.
        """
        rows = self.tours[start:stop]
        first, second = rows[:, :-1], rows[:, 1:]
        valid = (first != self.sentinel) & (second != self.sentinel)
        deposits = np.broadcast_to((1.0 / self.lengths[start:stop])[:, None], first.shape)
        return first[valid], second[valid], deposits[valid]

    def word_stream(self) -> Tuple[np.ndarray, np.ndarray]:
        """
        Edges as a flat stream of words (entry, successor, entry, successor, ...).

        Returns:
            (words, deposits) where deposits[e] belongs to words 2e and 2e+1
        """
        first, second, deposits = self.edges()
        words = np.empty(2 * first.size, dtype=np.int64)
        words[0::2] = first
        words[1::2] = second
        return words, deposits
