"""
Abstract memory-access counters for pheromone kernels.
"""
from dataclasses import dataclass

from src.models.aco_models import LedgerSnapshot


@dataclass
class AccessLedger:
    """Global/shared loads, global stores and atomic operations issued by one kernel."""
    global_loads: int = 0
    global_stores: int = 0
    shared_loads: int = 0
    atomic_ops: int = 0

    def merge(self, other: "AccessLedger") -> None:
        """Add another worker's counters (used at the phase barrier)."""
        self.global_loads += other.global_loads
        self.global_stores += other.global_stores
        self.shared_loads += other.shared_loads
        self.atomic_ops += other.atomic_ops

    def reset(self) -> None:
        self.global_loads = self.global_stores = self.shared_loads = self.atomic_ops = 0

    def snapshot(self, strategy: str, n: int, m: int, theta: int) -> LedgerSnapshot:
        return LedgerSnapshot(
            strategy=strategy,
            n=n,
            m=m,
            theta=theta,
            global_loads=self.global_loads,
            global_stores=self.global_stores,
            shared_loads=self.shared_loads,
            atomic_ops=self.atomic_ops,
        )
