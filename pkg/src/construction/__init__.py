"""
Tour-construction strategies and their random streams.
"""
from src.construction.base import SelectionStats, Selector
from src.construction.data_parallel import DataParallelSelector, select_next_data_parallel
from src.construction.nearest_neighbor import NearestNeighborSelector, select_next_nn
from src.construction.recompute import PheromoneWeights, RecomputingRouletteSelector, select_next_recompute
from src.construction.rng import RngStream, next_uniform
from src.construction.roulette import RouletteSelector, select_next_roulette
from src.construction.tour_builder import build_selector, construct_tour, new_ant, start_city

__all__ = [
    'SelectionStats',
    'Selector',
    'RngStream',
    'next_uniform',
    'RouletteSelector',
    'NearestNeighborSelector',
    'RecomputingRouletteSelector',
    'PheromoneWeights',
    'DataParallelSelector',
    'select_next_roulette',
    'select_next_nn',
    'select_next_recompute',
    'select_next_data_parallel',
    'build_selector',
    'construct_tour',
    'new_ant',
    'start_city',
]
