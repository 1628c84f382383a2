"""
Closed-form access costs of the deposit kernels.

With E = m * n edges the tour stream holds W = 2E words. A kernel that
stages words through shared memory loads ceil(W / theta) tiles; each of its
threads reads one word per tile from global memory and the rest of the tile
from shared memory.
"""
from typing import Union

from src.errors import ConfigError
from src.models.aco_models import DepositStrategy, DepositVariant, LedgerSnapshot
from src.pheromone.symmetric import symmetric_threads


def word_count(n: int, m: int) -> int:
    return 2 * m * n


def _tiles(words: int, theta: int) -> int:
    return -(-words // theta)


def predicted_access_cost(
    strategy: Union[DepositStrategy, DepositVariant, str],
    n: int,
    m: int,
    theta: int = 1,
) -> LedgerSnapshot:
    """
    Predicted ledger of one deposit invocation.

    Args:
        strategy: Deposit strategy, variant or variant name
        n: Number of cities
        m: Number of ants
        theta: Tile size; ignored by the untiled kernels

    Returns:
        LedgerSnapshot with the predicted counters
    """
    if isinstance(strategy, DepositStrategy):
        variant, theta = strategy.variant, strategy.tile_size
    else:
        try:
            variant = DepositVariant(strategy)
        except ValueError as exc:
            raise ConfigError(f"unknown deposit strategy {strategy!r}") from exc
    if n < 1 or m < 1 or theta < 1:
        raise ConfigError(f"n, m and theta must be >= 1 (got n={n}, m={m}, theta={theta})")

    words = word_count(n, m)
    counters = dict(global_loads=0, global_stores=0, shared_loads=0, atomic_ops=0)
    if variant is DepositVariant.ACCUMULATE:
        counters.update(global_loads=words, atomic_ops=words)
    elif variant is DepositVariant.SCATTER_GATHER:
        counters.update(global_loads=n * n * words, global_stores=n * n)
    else:
        threads = n * n if variant is DepositVariant.SCATTER_GATHER_TILED else symmetric_threads(n)
        tiles = _tiles(words, theta)
        counters.update(
            global_loads=threads * tiles,
            shared_loads=threads * tiles * (theta - 1),
            global_stores=n * n if variant is DepositVariant.SCATTER_GATHER_TILED else n * (n - 1),
        )
    return LedgerSnapshot(strategy=variant.value, n=n, m=m, theta=theta, **counters)


def evaporation_cost(n: int) -> LedgerSnapshot:
    cells = n * n
    return LedgerSnapshot(
        strategy="evaporation", n=n, m=0, theta=1, global_loads=cells, global_stores=cells
    )
