import numpy as np

# Philox4x64-10 is counter based: the stream for (seed, stream) is fixed by the seed
# sequence hash alone, identically on every platform numpy supports.
_SEED_MASK = (1 << 64) - 1


def make_rng(seed: int, stream: int = 0) -> np.random.Generator:
    """Generator for the sub-stream ``stream`` of the 64-bit master ``seed``"""
    sequence = np.random.SeedSequence(seed & _SEED_MASK, spawn_key=(stream, ))
    return np.random.Generator(np.random.Philox(sequence))


def derive_seed(master: int, stream: int) -> int:
    """64-bit seed of a derived stream, stable across runs and platforms"""
    sequence = np.random.SeedSequence(master & _SEED_MASK, spawn_key=(stream, ))
    return int(sequence.generate_state(1, dtype=np.uint64)[0])
