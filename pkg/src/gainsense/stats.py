"""Analytic law of the sensed per-block SNR in dB.

Under unit-mean exponential fading powers on both links, the ratio
phi = |h1|^2/|h0|^2 has CDF phi/(1+phi), and the sensed SNR in dB is that
ratio's dB value shifted by gamma_t_db + g1_db - g0_db. The result is a
logistic distribution in dB with scale 10/ln(10), which is what the
likelihood, score, and median below evaluate.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import expit

from .errors import NegativeRatioError
from .validation import check_finite, check_samples_db

_LN10 = math.log(10.0)


@dataclass(frozen=True)
class SnrLawParams:
    """Location parameters (all dB) of the sensed-SNR law."""

    gamma_t_db: float
    g1_db: float
    g0_db: float

    def __post_init__(self):
        check_finite("gamma_t_db", self.gamma_t_db)
        check_finite("g1_db", self.g1_db)
        check_finite("g0_db", self.g0_db)


def ratio_cdf(phi):
    """CDF phi/(1+phi) of the ratio of two i.i.d. unit-mean exponential powers."""
    p = np.asarray(phi, dtype=np.float64)
    if np.any(p < 0.0):
        raise NegativeRatioError("fading-power ratio must be >= 0")
    out = p / (1.0 + p)
    return out if p.ndim else float(out)


def snr_median_db(p: SnrLawParams) -> float:
    """Median of the sensed SNR in dB: gamma_t_db + g1_db - g0_db."""
    return p.gamma_t_db + p.g1_db - p.g0_db


def snr_cdf_db(gamma_c_db, p: SnrLawParams):
    """CDF of the sensed SNR evaluated at gamma_c_db."""
    x = np.asarray(gamma_c_db, dtype=np.float64) - snr_median_db(p)
    out = expit(x * (_LN10 / 10.0))
    return out if x.ndim else float(out)


def snr_pdf_db(gamma_c_db, p: SnrLawParams):
    """Density per dB of the sensed SNR; symmetric about the median, peak ln(10)/40."""
    t = snr_median_db(p) - np.asarray(gamma_c_db, dtype=np.float64)
    # v/(1+v)^2 with v = 10^(t/10), written with exp(-|t|...) so it never overflows
    a = np.exp(-np.abs(t) * (_LN10 / 10.0))
    out = (_LN10 / 10.0) * a / (1.0 + a) ** 2
    return out if t.ndim else float(out)


def log_likelihood(samples, g0_db: float, gamma_t_db: float, g1_db: float) -> float:
    """Base-10 log of the joint density of the samples for candidate gain g0_db."""
    arr = check_samples_db(samples)
    t = (gamma_t_db + g1_db - g0_db) - arr
    # per-sample log10 pdf: log10(ln10) - 1 + t/10 - 2*log10(1 + 10^(t/10))
    per = (math.log10(_LN10) - 1.0) + t / 10.0 - (2.0 / _LN10) * np.logaddexp(
        0.0, t * (_LN10 / 10.0)
    )
    return float(np.sum(per))


def _score(arr: np.ndarray, offset_db: float) -> float:
    # sum over samples of 0.1*(w-1)/(w+1), w = 10^((offset - sample)/10);
    # the tanh form is exact and saturates instead of overflowing
    return 0.1 * float(np.sum(np.tanh((offset_db - arr) * (_LN10 / 20.0))))


def score_f1(samples, g0_db: float, gamma_t_db: float, g1_db: float) -> float:
    """Derivative of log_likelihood with respect to g0_db.

    Monotone non-increasing in g0_db, with limits +K/10 and -K/10 as the
    candidate gain goes to -inf / +inf, so it has at most one sign change.
    """
    arr = check_samples_db(samples)
    return _score(arr, gamma_t_db + g1_db - g0_db)
