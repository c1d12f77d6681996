"""Interference temperature of the primary system from its channel gain.

The primary pair tolerates co-channel interference as long as, at maximum
transmit power, the outage probability of the target SNR stays at Theta.
Solving that condition under unit-mean exponential fading gives a closed
form for the admissible interference power; both directions of the relation
live here so they can check each other.
"""

import math
import warnings
from dataclasses import dataclass

from .errors import InvalidThetaError, NegativeInterferenceError
from .units import db_to_lin
from .validation import check_finite


@dataclass(frozen=True)
class ItempParams:
    """Inputs of the interference-temperature relation.

    Powers in dBm, gains/SNR in dB, theta a probability in (0, 1);
    g0_db may be the true gain or an estimate.
    """

    p_max_dbm: float
    theta: float
    gamma_t_db: float
    sigma2_dbm: float
    g0_db: float

    def __post_init__(self):
        check_finite("p_max_dbm", self.p_max_dbm)
        check_finite("gamma_t_db", self.gamma_t_db)
        check_finite("sigma2_dbm", self.sigma2_dbm)
        check_finite("g0_db", self.g0_db)
        if not 0.0 < self.theta < 1.0:
            raise InvalidThetaError(f"theta must lie in (0, 1), got {self.theta!r}")


def interference_temperature(p: ItempParams) -> float:
    """Admissible interference power in linear mW for outage target theta.

    Computed as -p_max*g0*ln(1-theta)/gamma_t - sigma^2 with every factor
    linear. A negative value means the primary link cannot meet its outage
    target even without interference; that regime is clamped to 0 mW (no
    cognitive transmission allowed) with a warning.
    """
    p_max = db_to_lin(p.p_max_dbm)
    g0 = db_to_lin(p.g0_db)
    gamma_t = db_to_lin(p.gamma_t_db)
    sigma2 = db_to_lin(p.sigma2_dbm)
    p_i = -p_max * g0 * math.log1p(-p.theta) / gamma_t - sigma2
    if p_i < 0.0:
        warnings.warn(
            "interference budget is negative (outage target unreachable); clamping to 0",
            RuntimeWarning,
            stacklevel=2,
        )
        return 0.0
    return p_i


def outage_probability(p: ItempParams, p_i_mw: float) -> float:
    """Probability that the target SNR fails at maximum transmit power.

    Evaluates 1 - exp(-gamma_t*(sigma^2 + p_i)/(p_max*g0)) with |h0|^2
    exponential of unit mean; p_i_mw is linear mW.
    """
    p_i = float(p_i_mw)
    if p_i < 0.0:
        raise NegativeInterferenceError(f"interference power must be >= 0, got {p_i_mw!r}")
    p_max = db_to_lin(p.p_max_dbm)
    g0 = db_to_lin(p.g0_db)
    gamma_t = db_to_lin(p.gamma_t_db)
    sigma2 = db_to_lin(p.sigma2_dbm)
    return -math.expm1(-gamma_t * (sigma2 + p_i) / (p_max * g0))
