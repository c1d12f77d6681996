"""Large-scale path loss and small-scale Rayleigh block fading.

The default path-loss constants are the 3GPP macro-cell ones,
``128 + 37.6*log10(d_km)`` for distances of at least 35 m. Small-scale
fading is block fading: |h|^2 is constant within a block, independent
across blocks, exponential with unit mean (unit average fading power).
"""

from dataclasses import dataclass

import math

import numpy as np

from .errors import DistanceTooSmallError, InvalidRadiusError, ZeroFadingError
from .units import as_generator
from .validation import check_finite


@dataclass(frozen=True)
class PathLossModel:
    """Log-distance path loss intercept + slope*log10(d_km) above min_distance_km."""

    intercept_db: float = 128.0
    slope_db_per_decade: float = 37.6
    min_distance_km: float = 0.035

    def __post_init__(self):
        check_finite("intercept_db", self.intercept_db)
        if self.slope_db_per_decade <= 0.0:
            raise ValueError("slope_db_per_decade must be > 0")
        if self.min_distance_km <= 0.0:
            raise ValueError("min_distance_km must be > 0")


DEFAULT_PATH_LOSS = PathLossModel()


@dataclass(frozen=True)
class Geometry:
    """Link distances in km: d0 primary pair, d1 transmitter-to-sensor, coverage radius."""

    d0_km: float
    d1_km: float
    r_km: float

    def __post_init__(self):
        dmin = DEFAULT_PATH_LOSS.min_distance_km
        check_finite("d0_km", self.d0_km)
        check_finite("d1_km", self.d1_km)
        check_finite("r_km", self.r_km)
        if self.r_km <= dmin:
            raise InvalidRadiusError(f"r_km must exceed {dmin} km, got {self.r_km}")
        if not dmin <= self.d0_km <= self.r_km:
            raise ValueError(
                f"d0_km must lie in [{dmin}, r_km={self.r_km}] km, got {self.d0_km}"
            )
        if self.d1_km < dmin:
            raise DistanceTooSmallError(
                f"d1_km must be at least {dmin} km, got {self.d1_km}"
            )


def path_loss_db(d_km: float, model: PathLossModel = DEFAULT_PATH_LOSS) -> float:
    """Path loss in dB at distance d_km; strictly increasing in distance."""
    d = check_finite("d_km", d_km)
    if d < model.min_distance_km:
        raise DistanceTooSmallError(
            f"path-loss model is valid for d >= {model.min_distance_km} km, got {d}"
        )
    return model.intercept_db + model.slope_db_per_decade * math.log10(d)


def large_scale_gain_db(d_km: float, model: PathLossModel = DEFAULT_PATH_LOSS) -> float:
    """Distance-determined channel gain in dB (negated path loss); constant over time."""
    return -path_loss_db(d_km, model)


def gain_bounds_db(r_km: float, model: PathLossModel = DEFAULT_PATH_LOSS):
    """(lowest, highest) large-scale gain for a receiver somewhere within r_km.

    The low end corresponds to the coverage edge, the high end to the
    model's minimum valid distance.
    """
    r = check_finite("r_km", r_km)
    if r <= model.min_distance_km:
        raise InvalidRadiusError(
            f"radius must exceed {model.min_distance_km} km, got {r}"
        )
    return (
        large_scale_gain_db(r, model),
        large_scale_gain_db(model.min_distance_km, model),
    )


@dataclass(frozen=True)
class BlockFading:
    """Squared fading magnitudes |h0|^2, |h1|^2 for one block (or a vector of blocks)."""

    h0_sq: object
    h1_sq: object

    def __post_init__(self):
        for name, value in (("h0_sq", self.h0_sq), ("h1_sq", self.h1_sq)):
            arr = np.asarray(value, dtype=np.float64)
            if not np.all(np.isfinite(arr)):
                raise ValueError(f"{name} must be finite")
            if np.any(arr <= 0.0):
                raise ZeroFadingError(f"{name} must be > 0")


def sample_block_fading(rng, size=None) -> BlockFading:
    """Draw independent |h|^2 for both links: exponential, unit mean.

    ``size=None`` gives scalar fields; an int gives vectors for that many blocks.
    """
    gen = as_generator(rng)
    return BlockFading(
        h0_sq=gen.exponential(1.0, size),
        h1_sq=gen.exponential(1.0, size),
    )
