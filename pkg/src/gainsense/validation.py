"""Lightweight input checks shared by the estimation and simulation APIs."""

import math

import numpy as np

from .errors import EmptySampleSetError


def check_finite(name: str, value) -> float:
    """Return value as float, rejecting NaN and infinities."""
    v = float(value)
    if not math.isfinite(v):
        raise ValueError(f"{name} must be finite, got {value!r}")
    return v


def check_positive(name: str, value) -> float:
    v = check_finite(name, value)
    if v <= 0.0:
        raise ValueError(f"{name} must be > 0, got {value!r}")
    return v


def check_samples_db(samples) -> np.ndarray:
    """Coerce dB SNR samples into a validated 1-D float64 array.

    Accepts an SnrSampleSet (taken as-is, it validates on construction),
    an ndarray, or any sequence of reals.
    """
    arr = getattr(samples, "samples_db", None)
    if arr is not None:
        return arr
    arr = np.asarray(samples, dtype=np.float64).ravel()
    if arr.size == 0:
        raise EmptySampleSetError("need at least one SNR sample")
    if not np.all(np.isfinite(arr)):
        raise ValueError("SNR samples must all be finite")
    return arr
