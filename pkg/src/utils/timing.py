"""
Monotonic phase timing in milliseconds.
"""
import time
from dataclasses import dataclass


@dataclass
class PhaseTimer:
    """Context manager; elapsed_ms holds the duration of the last with-block."""
    elapsed_ms: float = 0.0

    def __enter__(self) -> "PhaseTimer":
        self._start = time.perf_counter()
        return self

    def __exit__(self, *exc) -> None:
        self.elapsed_ms = (time.perf_counter() - self._start) * 1000.0
