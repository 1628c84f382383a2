"""
Roulette restricted to the nearest-neighbour list, with argmax fallback.
"""
from typing import Optional

import numpy as np

from src.construction.base import (
    SelectionStats,
    Selector,
    unvisited_or_raise,
    zero_weight_fallback,
)
from src.construction.roulette import roulette_pick
from src.construction.rng import RngStream
from src.models.ant import TabuBitset
from src.models.problem import ChoiceInfo, NearestNeighborLists


def select_next_nn(
    choice: ChoiceInfo,
    nn_lists: NearestNeighborLists,
    current: int,
    tabu: TabuBitset,
    stream: RngStream,
    stats: Optional[SelectionStats] = None,
    strict: bool = False,
) -> int:
    """
    Random proportional rule renormalised to the unvisited members of nn_lists[current], walked in list order.

    When every listed neighbour is visited, returns the unvisited city with the largest
    choice-info value (lowest index on ties) without consuming a draw.
    """
    mask = unvisited_or_raise(tabu)
    candidates = nn_lists.lists[current]
    open_candidates = candidates[mask[candidates]]

    if open_candidates.size:
        weights = choice.value[current, open_candidates]
        cumulative = np.cumsum(weights)
        if not cumulative[-1] > 0.0:
            return zero_weight_fallback(np.sort(open_candidates), stats, strict)
        return int(open_candidates[roulette_pick(cumulative, weights, stream.next_uniform())])

    if stats is not None:
        stats.nn_fallbacks += 1
    row = np.where(mask, choice.value[current], -np.inf)
    return int(np.argmax(row))


class NearestNeighborSelector(Selector):
    """Candidate-list roulette."""

    def __init__(self, nn_lists: NearestNeighborLists):
        self.nn_lists = nn_lists

    def get_name(self) -> str:
        return "nn"

    def select(self, choice, current, tabu, stream, stats=None) -> int:
        return select_next_nn(choice, self.nn_lists, current, tabu, stream, stats, self.strict)
