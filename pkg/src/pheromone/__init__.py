"""
Pheromone evaporation, deposit kernels and their access accounting.
"""
from typing import Dict, Type

from src.models.aco_models import DepositStrategy, DepositVariant
from src.pheromone.accumulate import AccumulateKernel, deposit_accumulate
from src.pheromone.base import DepositKernel
from src.pheromone.cost_model import evaporation_cost, predicted_access_cost
from src.pheromone.evaporation import EVAPORATION_STRATEGY, evaporate
from src.pheromone.ledger import AccessLedger
from src.pheromone.scatter_gather import (
    ScatterGatherKernel,
    TiledScatterGatherKernel,
    deposit_scatter_gather,
    deposit_scatter_gather_tiled,
)
from src.pheromone.symmetric import SymmetricReductionKernel, deposit_symmetric_reduction
from src.pheromone.tour_buffer import TourBuffer

# Deposit variant to kernel class mapping
DEPOSIT_KERNEL_MAP: Dict[DepositVariant, Type[DepositKernel]] = {
    DepositVariant.ACCUMULATE: AccumulateKernel,
    DepositVariant.SCATTER_GATHER: ScatterGatherKernel,
    DepositVariant.SCATTER_GATHER_TILED: TiledScatterGatherKernel,
    DepositVariant.SYMMETRIC_REDUCTION: SymmetricReductionKernel,
}


def build_deposit_kernel(strategy: DepositStrategy) -> DepositKernel:
    return DEPOSIT_KERNEL_MAP[strategy.variant](strategy.tile_size)


__all__ = [
    'AccessLedger',
    'TourBuffer',
    'DepositKernel',
    'AccumulateKernel',
    'ScatterGatherKernel',
    'TiledScatterGatherKernel',
    'SymmetricReductionKernel',
    'DEPOSIT_KERNEL_MAP',
    'EVAPORATION_STRATEGY',
    'build_deposit_kernel',
    'evaporate',
    'deposit_accumulate',
    'deposit_scatter_gather',
    'deposit_scatter_gather_tiled',
    'deposit_symmetric_reduction',
    'predicted_access_cost',
    'evaporation_cost',
]
