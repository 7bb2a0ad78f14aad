import zlib

import numpy as np


def generator(seed, *labels):
    """Return a :class:`numpy.random.Generator` derived from `seed`
    and the given string `labels`.

    Derivation is stable across processes (labels are hashed with
    CRC-32, not with the salted builtin :func:`hash`), so two runs with
    the same seed draw the same values for the same step.
    """
    key = [zlib.crc32(str(x).encode('utf-8')) for x in labels]
    return np.random.default_rng(np.random.SeedSequence(int(seed), spawn_key=key))


def residues(rng, p, n, nonzero=False):
    """Draw `n` uniform residues modulo `p` as Python integers."""
    low = 1 if nonzero else 0
    return [int(x) for x in rng.integers(low, p, size=n)]
