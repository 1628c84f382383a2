"""
Roulette that recomputes tau^alpha * eta^beta for the current row on every step.

Baseline for the choice-info table: the same draw and prefix-sum walk as the
full-row roulette, but the product is evaluated per ant per step instead of
once per iteration.
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np

from src.construction.base import SelectionStats, Selector
from src.construction.rng import RngStream
from src.construction.roulette import roulette_over_row
from src.models.ant import TabuBitset
from src.models.problem import PheromoneMatrix, ProblemInstance


@dataclass(frozen=True)
class PheromoneWeights:
    """Live pheromone and the exponents of the random proportional rule."""
    tau: PheromoneMatrix
    heuristic: np.ndarray
    alpha: float
    beta: float

    @classmethod
    def of(cls, tau: PheromoneMatrix, problem: ProblemInstance, alpha: float, beta: float) -> "PheromoneWeights":
        return cls(tau=tau, heuristic=problem.heuristic, alpha=alpha, beta=beta)

    def row(self, current: int) -> np.ndarray:
        """tau[current]^alpha * eta[current]^beta, the same arithmetic as compute_choice_info."""
        return np.power(self.tau.tau[current], self.alpha) * np.power(self.heuristic[current], self.beta)


def select_next_recompute(
    weights: PheromoneWeights,
    current: int,
    tabu: TabuBitset,
    stream: RngStream,
    stats: Optional[SelectionStats] = None,
    strict: bool = False,
) -> int:
    """Random proportional selection with the row product computed on the spot."""
    return roulette_over_row(weights.row(current), tabu, stream, stats, strict)


class RecomputingRouletteSelector(Selector):
    """Full-row roulette that ignores the precomputed choice-info table."""

    def __init__(self, weights: PheromoneWeights):
        self.weights = weights

    def get_name(self) -> str:
        return "roulette-recompute"

    def select(self, choice, current, tabu, stream, stats=None) -> int:
        return select_next_recompute(self.weights, current, tabu, stream, stats, self.strict)
