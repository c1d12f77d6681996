"""dB/linear scalar conversions and reproducible random streams.

Scalars stay plain floats; the ``Db``/``Lin`` aliases only document which
scale a value lives on. Powers carry dBm, gains and SNRs carry dB, and the
two are never mixed by the converters (they are pure scale changes).
"""

import math

import numpy as np

from .errors import NonPositiveValueError

Db = float
Lin = float


def db_to_lin(x_db: float) -> float:
    """Convert a dB value to linear scale, 10**(x/10)."""
    x = float(x_db)
    if not math.isfinite(x):
        raise ValueError(f"dB value must be finite, got {x_db!r}")
    return 10.0 ** (x / 10.0)


def lin_to_db(x_lin: float) -> float:
    """Convert a positive linear value to dB, 10*log10(x)."""
    x = float(x_lin)
    if not math.isfinite(x):
        raise ValueError(f"linear value must be finite, got {x_lin!r}")
    if x <= 0.0:
        raise NonPositiveValueError(
            f"linear value must be > 0 for a dB conversion, got {x_lin!r}"
        )
    return 10.0 * math.log10(x)


class RngStream:
    """One reproducible random stream out of a family indexed by trial.

    Equal ``(master_seed, stream_index)`` pairs produce bit-identical draw
    sequences; distinct indices produce statistically independent streams
    (PCG64 seeded through a spawn key, so streams never overlap).
    """

    def __init__(self, master_seed: int, stream_index: int = 0):
        master_seed = int(master_seed)
        stream_index = int(stream_index)
        if master_seed < 0:
            raise ValueError("master_seed must be non-negative")
        if stream_index < 0:
            raise ValueError("stream_index must be non-negative")
        self.master_seed = master_seed
        self.stream_index = stream_index
        seq = np.random.SeedSequence(entropy=master_seed, spawn_key=(stream_index,))
        self.generator = np.random.default_rng(seq)

    def __repr__(self):
        return f"RngStream(master_seed={self.master_seed}, stream_index={self.stream_index})"


def as_generator(rng) -> np.random.Generator:
    """Coerce an RngStream, numpy Generator, int seed, or None to a Generator."""
    if isinstance(rng, RngStream):
        return rng.generator
    if isinstance(rng, np.random.Generator):
        return rng
    return np.random.default_rng(rng)
