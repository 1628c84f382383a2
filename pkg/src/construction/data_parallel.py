"""
Data-parallel multiply-and-reduce selection (independent roulette).

Each city j gets score value[current][j] * u_j * unvisited_j from its own draw u_j.
Cities are split into tiles of theta; each tile keeps its best city and the best of
those partial winners is returned. The result does NOT follow the random proportional rule.
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
from src.errors import ConfigError
from src.models.ant import TabuBitset
from src.models.problem import ChoiceInfo


def tile_winners(scores: np.ndarray, theta: int):
    """Per-tile argmax (first maximum) as global city indices, plus their scores."""
    n = scores.size
    tiles = -(-n // theta)
    padded = np.zeros(tiles * theta, dtype=scores.dtype)
    padded[:n] = scores
    blocks = padded.reshape(tiles, theta)
    local = blocks.argmax(axis=1)
    rows = np.arange(tiles)
    return rows * theta + local, blocks[rows, local]


def select_next_data_parallel(
    choice: ChoiceInfo,
    current: int,
    tabu: TabuBitset,
    stream: RngStream,
    theta: int,
    stats: Optional[SelectionStats] = None,
    strict: bool = False,
) -> int:
    """
    Tiled multiply-and-reduce pick; ties go to the lowest city index.

    Consumes exactly n draws (one per city, ascending index), visited or not, so the
    outcome is the same for every theta.
    """
    if theta < 1:
        raise ConfigError(f"tile size must be >= 1, got {theta}")
    mask = unvisited_or_raise(tabu)
    draws = stream.uniforms(mask.size)
    scores = choice.value[current] * draws * mask

    winners, winner_scores = tile_winners(scores, theta)
    best = int(np.argmax(winner_scores))
    if not winner_scores[best] > 0.0:
        return zero_weight_fallback(np.flatnonzero(mask), stats, strict)
    return int(winners[best])


class DataParallelSelector(Selector):
    """Tiled independent roulette."""

    def __init__(self, theta: int):
        if theta < 1:
            raise ConfigError(f"tile size must be >= 1, got {theta}")
        self.theta = theta

    def get_name(self) -> str:
        return "data-parallel"

    def select(self, choice, current, tabu, stream, stats=None) -> int:
        return select_next_data_parallel(choice, current, tabu, stream, self.theta, stats, self.strict)
