"""
TSPLIB input/output and instance generation.
"""
from src.data.generator import random_instance
from src.data.tsplib_loader import (
    distance_matrix,
    edge_weight,
    load_instance,
    load_tour,
    parse_instance,
    parse_tour,
    serialize_instance,
)

__all__ = [
    'random_instance',
    'parse_instance',
    'parse_tour',
    'edge_weight',
    'distance_matrix',
    'serialize_instance',
    'load_instance',
    'load_tour',
]
