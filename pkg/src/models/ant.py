"""
Per-ant construction state: packed tabu bitset, partial tour and tour length.
"""
from dataclasses import dataclass, field
from functools import lru_cache
from typing import TYPE_CHECKING, Optional, Tuple

import numpy as np

from src.errors import IndexOutOfRangeError

if TYPE_CHECKING:
    from src.construction.rng import RngStream

WORD_BITS = 32


@lru_cache(maxsize=32)
def _bit_layout(n: int) -> Tuple[np.ndarray, np.ndarray]:
    cities = np.arange(n)
    words = cities // WORD_BITS
    bits = (cities % WORD_BITS).astype(np.uint32)
    words.setflags(write=False)
    bits.setflags(write=False)
    return words, bits


class TabuBitset:
    """
    Visited-city memory packed into 32-bit words; city c is bit c % 32 of word c // 32.
    """

    def __init__(self, n: int):
        self.n = n
        self.words = np.zeros(-(-n // WORD_BITS), dtype=np.uint32)

    def _check(self, city: int) -> None:
        if not 0 <= city < self.n:
            raise IndexOutOfRangeError(f"city {city} outside [0, {self.n})")

    def visit(self, city: int) -> None:
        self._check(city)
        self.words[city // WORD_BITS] |= np.uint32(1 << (city % WORD_BITS))

    def is_visited(self, city: int) -> bool:
        self._check(city)
        return bool((int(self.words[city // WORD_BITS]) >> (city % WORD_BITS)) & 1)

    def unvisited_mask(self) -> np.ndarray:
        """Boolean array, True where the city has not been visited yet."""
        words, bits = _bit_layout(self.n)
        return ((self.words[words] >> bits) & np.uint32(1)) == 0

    def count(self) -> int:
        return int(np.bitwise_count(self.words).sum())

    def all_visited(self) -> bool:
        return self.count() == self.n


@dataclass
class AntState:
    """Tabu list M^k, tour T^k (closed, n + 1 entries) and length C^k of one ant."""
    index: int
    n: int
    rng: Optional["RngStream"] = None
    tabu: TabuBitset = field(init=False)
    tour: np.ndarray = field(init=False)
    length: int = 0
    steps: int = 0

    def __post_init__(self):
        self.tabu = TabuBitset(self.n)
        self.tour = np.full(self.n + 1, -1, dtype=np.int64)

    @property
    def current(self) -> int:
        return int(self.tour[self.steps])

    def place(self, city: int) -> None:
        """Put the ant on its start city."""
        self.tabu.visit(city)
        self.tour[0] = city
        self.steps = 0

    def move_to(self, city: int) -> None:
        self.tabu.visit(city)
        self.steps += 1
        self.tour[self.steps] = city

    def close(self) -> None:
        """Return to the start city."""
        self.tour[self.n] = self.tour[0]
