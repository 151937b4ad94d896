import numpy as np

from influence.rng import RngStream
from influence.utils import RNG_BLOCK


class Test00RngStream:

    def test_01_same_seed_same_sequence(self):
        left, right = RngStream(11, 2), RngStream(11, 2)
        assert [left.random() for _ in range(50)] == [
            right.random() for _ in range(50)], (
            'Make sure that two streams built from the same seed and stream '
            'id produce the same doubles.'
        )

    def test_02_streams_are_independent(self):
        base = RngStream(11)
        draws = {
            'stream 0': [base.random() for _ in range(5)],
            'stream 1': [RngStream(11, 1).random() for _ in range(5)],
            'substream 0': [base.substream(0).random() for _ in range(5)],
            'seed 12': [RngStream(12).random() for _ in range(5)],
        }
        assert len({tuple(values) for values in draws.values()}) == 4, (
            'Make sure that different stream ids, substreams and seeds give '
            'different sequences.'
        )

    def test_03_draws_cross_block_boundaries(self):
        stream = RngStream(7)
        drawn = [stream.random() for _ in range(RNG_BLOCK + 10)]
        generator = np.random.Generator(np.random.PCG64(
            np.random.SeedSequence(7, spawn_key=(0,))))
        expected = generator.random(2 * RNG_BLOCK)[:RNG_BLOCK + 10].tolist()
        assert drawn == expected, (
            'Make sure that buffered doubles are served in generator order '
            'across block refills.'
        )
        assert all(0.0 <= value < 1.0 for value in drawn)

    def test_04_below(self):
        stream = RngStream(3)
        values = [stream.below(6) for _ in range(600)]
        assert set(values) == set(range(6)), (
            'Make sure that `below(6)` returns every integer in [0, 6).'
        )
        assert stream.below(1) == 0

    def test_05_generator_is_reproducible(self):
        left = RngStream(5, 4).generator().random(3)
        right = RngStream(5, 4).generator().random(3)
        assert np.array_equal(left, right), (
            'Make sure that `generator()` is seeded from the stream only.'
        )
        assert not np.array_equal(left, RngStream(5, 3).generator().random(3))
