"""
Counter-based random streams for tour construction.

Every draw is a pure function of (key, iteration, ant, step, draw index): the stream id is
folded into the Philox counter, so the values an ant sees never depend on which worker
builds it or in which order ants are scheduled.
"""
from typing import Tuple

import numpy as np

# Step index 0 is reserved for the random-start draw; construction steps use 1..n-1.
START_STEP = 0


class RngStream:
    """
    Philox4x64 stream keyed by the run seed.

    Counter words: [draw index, step, ant, iteration]. The bit generator advances the
    draw word itself, so streams with different (iteration, ant, step) never overlap.
    """

    def __init__(self, key: int, iteration: int = 0, ant: int = 0, step: int = START_STEP):
        self.key = key
        self.iteration = iteration
        self.ant = ant
        self.draws = 0
        self.begin_step(step)

    @property
    def stream_id(self) -> Tuple[int, int, int]:
        return (self.iteration, self.ant, self.step)

    def begin_step(self, step: int) -> None:
        """Re-key the counter for a construction step and reset the draw index."""
        self.step = step
        counter = np.array([0, step, self.ant, self.iteration], dtype=np.uint64)
        self._generator = np.random.Generator(np.random.Philox(key=self.key, counter=counter))
        self.draws = 0

    def next_uniform(self) -> float:
        """One uniform draw in [0, 1)."""
        self.draws += 1
        return float(self._generator.random())

    def uniforms(self, count: int) -> np.ndarray:
        """count consecutive draws, identical to count calls of next_uniform."""
        self.draws += count
        return self._generator.random(count)


def next_uniform(stream: RngStream) -> float:
    """Draw the next uniform value in [0, 1) from stream."""
    return stream.next_uniform()
