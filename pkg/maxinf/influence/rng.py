"""Reproducible random streams derived from one master seed."""
import numpy as np

from .utils import RNG_BLOCK


class RngStream:
    """Single-consumer stream of uniform doubles.

    The same (seed, stream_id, spawn_key) always yields the same sequence.
    Doubles are drawn from the generator in blocks, so one draw per coin flip
    stays cheap inside the traversal loops.
    """

    __slots__ = ('seed', 'stream_id', 'spawn_key', '_generator', '_block',
                 '_pos')

    def __init__(self, seed, stream_id=0, spawn_key=()):
        self.seed = int(seed)
        self.stream_id = int(stream_id)
        self.spawn_key = tuple(int(key) for key in spawn_key)
        sequence = np.random.SeedSequence(
            self.seed & 0xFFFFFFFFFFFFFFFF,
            spawn_key=(self.stream_id, *self.spawn_key),
        )
        self._generator = np.random.Generator(np.random.PCG64(sequence))
        self._block = []
        self._pos = 0

    def __repr__(self):
        return (f'RngStream(seed={self.seed}, stream_id={self.stream_id}, '
                f'spawn_key={self.spawn_key})')

    def substream(self, index):
        return RngStream(self.seed, self.stream_id,
                         (*self.spawn_key, index))

    def random(self):
        if self._pos == len(self._block):
            self._block = self._generator.random(RNG_BLOCK).tolist()
            self._pos = 0
        value = self._block[self._pos]
        self._pos += 1
        return value

    def below(self, bound):
        """Uniform integer in [0, bound)."""
        return min(int(self.random() * bound), bound - 1)

    def generator(self):
        """A numpy generator for bulk draws, seeded from this stream."""
        return np.random.Generator(np.random.PCG64(
            np.random.SeedSequence(
                self.seed & 0xFFFFFFFFFFFFFFFF,
                spawn_key=(self.stream_id, *self.spawn_key, 0xB01C),
            )
        ))
