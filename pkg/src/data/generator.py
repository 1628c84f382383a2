"""
Random uniform instances for tests and benchmarks.
"""
import numpy as np

from src.models.aco_models import EdgeWeightType, InstanceSpec


def random_instance(
    n: int,
    seed: int = 0,
    side: float = 1000.0,
    edge_weight_type: EdgeWeightType = EdgeWeightType.EUC_2D,
    integral: bool = True,
) -> InstanceSpec:
    """n cities drawn uniformly from a side x side square."""
    rng = np.random.default_rng(seed)
    points = rng.uniform(0.0, side, size=(n, 2))
    if integral:
        points = np.floor(points)
    return InstanceSpec(
        name=f"rand{n}_{seed}",
        dimension=n,
        edge_weight_type=edge_weight_type,
        coords=[(float(x), float(y)) for x, y in points],
    )
