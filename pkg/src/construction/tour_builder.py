"""
Tour construction for one ant, plus the selector factory.
"""
from typing import Optional, Union

from src.construction.base import SelectionStats, Selector
from src.construction.data_parallel import DataParallelSelector
from src.construction.nearest_neighbor import NearestNeighborSelector
from src.construction.recompute import PheromoneWeights, RecomputingRouletteSelector
from src.construction.rng import START_STEP, RngStream
from src.construction.roulette import RouletteSelector
from src.errors import ConfigError
from src.models.aco_models import SelectionStrategy, SelectionVariant
from src.models.ant import AntState
from src.models.problem import ChoiceInfo, NearestNeighborLists, ProblemInstance, tour_length


def build_selector(
    strategy: SelectionStrategy,
    nn_lists: Optional[NearestNeighborLists] = None,
    weights: Optional[PheromoneWeights] = None,
) -> Selector:
    """Instantiate the selector a SelectionStrategy describes."""
    if strategy.variant is SelectionVariant.ROULETTE_FULL:
        return RouletteSelector()
    if strategy.variant is SelectionVariant.ROULETTE_RECOMPUTE:
        if weights is None:
            raise ConfigError("the roulette-recompute strategy needs the live pheromone weights")
        return RecomputingRouletteSelector(weights)
    if strategy.variant is SelectionVariant.ROULETTE_NN:
        if nn_lists is None:
            raise ConfigError("the nn selection strategy needs nearest-neighbour lists")
        return NearestNeighborSelector(nn_lists)
    return DataParallelSelector(strategy.tile_size)


def new_ant(index: int, n: int, key: int, iteration: int) -> AntState:
    """Fresh ant with its own RNG stream for this iteration."""
    return AntState(index=index, n=n, rng=RngStream(key, iteration, index))


def start_city(ant: AntState, random_start: bool = False) -> int:
    """Ant k starts at k mod n, or at a city drawn from its stream's step-0 slot."""
    if not random_start:
        return ant.index % ant.n
    ant.rng.begin_step(START_STEP)
    return min(int(ant.rng.next_uniform() * ant.n), ant.n - 1)


def construct_tour(
    problem: ProblemInstance,
    choice: ChoiceInfo,
    nn_lists: Optional[NearestNeighborLists],
    strategy: Union[Selector, SelectionStrategy],
    ant: AntState,
    start: int,
    stats: Optional[SelectionStats] = None,
) -> AntState:
    """
    Build a complete closed tour for one ant.

    Args:
        problem: Problem instance
        choice: Choice-info table of the current iteration (read only)
        nn_lists: Candidate lists, needed by the nn strategy
        strategy: Selector instance or the strategy it should be built from
        ant: Freshly initialised ant
        start: Start city chosen by the engine
        stats: Fallback counters of the calling worker

    Returns:
        The same ant, with tour, tabu and length filled in
    """
    if ant.tabu.count() != 0:
        raise ValueError(f"ant {ant.index} has already been placed")
    selector = strategy if isinstance(strategy, Selector) else build_selector(strategy, nn_lists)

    ant.place(start)
    for step in range(1, problem.n):
        ant.rng.begin_step(step)
        ant.move_to(selector.select(choice, ant.current, ant.tabu, ant.rng, stats))
    ant.close()
    ant.length = tour_length(problem, ant.tour)
    return ant
