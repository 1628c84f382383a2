"""
Random proportional rule over all unvisited cities.
"""
from typing import Optional

import numpy as np

from src.construction.base import (
    SelectionStats,
    Selector,
    unvisited_or_raise,
    zero_weight_fallback,
)
from src.construction.rng import RngStream
from src.models.ant import TabuBitset
from src.models.problem import ChoiceInfo


def roulette_pick(cumulative: np.ndarray, weights: np.ndarray, u: float) -> int:
    """
    Position of the first prefix sum strictly above u * total.

    Rounding can push u * total up to the total itself; the last positive weight
    is returned in that case.
    """
    target = u * cumulative[-1]
    index = int(np.searchsorted(cumulative, target, side="right"))
    if index >= cumulative.size:
        index = int(np.flatnonzero(weights)[-1])
    return index


def select_next_roulette(
    choice: ChoiceInfo,
    current: int,
    tabu: TabuBitset,
    stream: RngStream,
    stats: Optional[SelectionStats] = None,
    strict: bool = False,
) -> int:
    """
    Random proportional selection: P(j) = value[current][j] / sum of value[current][l] over unvisited l.

    One uniform draw, then a prefix-sum walk over unvisited cities in ascending index order.
    """
    return roulette_over_row(choice.value[current], tabu, stream, stats, strict)


def roulette_over_row(
    row: np.ndarray,
    tabu: TabuBitset,
    stream: RngStream,
    stats: Optional[SelectionStats] = None,
    strict: bool = False,
) -> int:
    """Prefix-sum roulette over one row of weights, restricted to unvisited cities."""
    mask = unvisited_or_raise(tabu)
    weights = np.where(mask, row, 0.0)
    cumulative = np.cumsum(weights)
    if not cumulative[-1] > 0.0:
        return zero_weight_fallback(np.flatnonzero(mask), stats, strict)
    return roulette_pick(cumulative, weights, stream.next_uniform())


class RouletteSelector(Selector):
    """Full-row roulette wheel."""

    def get_name(self) -> str:
        return "roulette"

    def select(self, choice, current, tabu, stream, stats=None) -> int:
        return select_next_roulette(choice, current, tabu, stream, stats, self.strict)
