"""
Shared fixtures and straight-line oracles for the test suite.
"""
import math
from pathlib import Path

from src.construction.rng import RngStream
from src.models.aco_models import EdgeWeightType, InstanceSpec

DATA_DIR = Path(__file__).parent.parent / "data" / "tsplib"
ATT48 = DATA_DIR / "att48.tsp"
ATT48_TOUR = DATA_DIR / "att48.opt.tour"
ATT48_OPTIMUM = 10628
KROC100 = DATA_DIR / "kroC100.tsp"

TRIANGLE_TSP = """NAME : triangle
TYPE : TSP
DIMENSION : 3
EDGE_WEIGHT_TYPE : EUC_2D
NODE_COORD_SECTION
1 0 0
2 3 4
3 0 8
EOF
"""


def make_spec(coords, weight_type=EdgeWeightType.EUC_2D, name="test"):
    return InstanceSpec(
        name=name,
        dimension=len(coords),
        edge_weight_type=weight_type,
        coords=[(float(x), float(y)) for x, y in coords],
    )


def att_oracle(a, b):
    """TSPLIB pseudo-Euclidean distance, written out from the format definition."""
    xd = a[0] - b[0]
    yd = a[1] - b[1]
    rij = math.sqrt((xd * xd + yd * yd) / 10.0)
    tij = int(rij + 0.5)
    if tij < rij:
        return tij + 1
    return tij


def oracle_roulette_tour(value, n, key, iteration, ant, start):
    """
    Random proportional construction with a plain visited list and a Python loop.

    Uses the same stream layout as the library: one stream per step, steps 1..n-1.
    """
    visited = [False] * n
    tour = [start]
    visited[start] = True
    current = start
    for step in range(1, n):
        u = RngStream(key, iteration, ant, step).next_uniform()
        weights = [0.0 if visited[j] else float(value[current][j]) for j in range(n)]
        total = 0.0
        for w in weights:
            total += w
        target = u * total
        running = 0.0
        chosen = None
        for j in range(n):
            running += weights[j]
            if running > target:
                chosen = j
                break
        if chosen is None:
            chosen = max(j for j in range(n) if weights[j] > 0)
        tour.append(chosen)
        visited[chosen] = True
        current = chosen
    tour.append(start)
    return tour
