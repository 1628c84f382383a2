"""
Evaporation: tau <- (1 - rho) * tau on every cell.
"""
from typing import Optional

from src.errors import ConfigError
from src.models.problem import PheromoneMatrix
from src.pheromone.ledger import AccessLedger

EVAPORATION_STRATEGY = "evaporation"


def evaporate(
    tau: PheromoneMatrix, rho: float, ledger: Optional[AccessLedger] = None
) -> PheromoneMatrix:
    """
    Scale every cell by (1 - rho) in place; one load and one store per cell.
    """
    if not 0.0 < rho <= 1.0:
        raise ConfigError(f"rho must be in (0,1], got {rho}")
    tau.tau *= 1.0 - rho
    if ledger is not None:
        cells = tau.n * tau.n
        ledger.global_loads += cells
        ledger.global_stores += cells
    return tau
