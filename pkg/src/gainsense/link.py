"""Power-controlled primary link and the sensed-SNR sample generator.

The primary pair runs closed-loop power control: the transmitter inverts its
own channel so the receiver sits exactly at the target SNR. The sensing node
overhears those transmissions and measures one SNR per fading block with an
energy detector, which is where all measurement error enters.
"""

from dataclasses import dataclass

import numpy as np

from .channel import BlockFading, Geometry, large_scale_gain_db, sample_block_fading
from .errors import EmptySampleSetError, ZeroFadingError
from .units import as_generator
from .validation import check_finite, check_positive

# Reporting floor of the energy detector, linear scale. 0.25 (~ -6 dB) is the
# practical sensitivity wall of an energy detector with roughly +-0.5 dB
# noise-power calibration uncertainty; it also keeps the dB transform total.
DEFAULT_SNR_FLOOR_LIN = 0.25


@dataclass(frozen=True)
class PrimaryConfig:
    """Primary-system parameters: QoS target, noise power, geometry, power cap."""

    gamma_t_db: float = 10.0
    sigma2_dbm: float = -114.0
    geometry: Geometry = Geometry(0.25, 0.1, 0.5)
    p_max_dbm: float = 46.0
    clip_at_p_max: bool = False

    def __post_init__(self):
        check_finite("gamma_t_db", self.gamma_t_db)
        check_finite("sigma2_dbm", self.sigma2_dbm)
        check_finite("p_max_dbm", self.p_max_dbm)


@dataclass(frozen=True)
class MeasurementConfig:
    """Per-block SNR measurement: energy detection over j_samples symbols."""

    j_samples: int = 100
    snr_floor_lin: float = DEFAULT_SNR_FLOOR_LIN

    def __post_init__(self):
        if int(self.j_samples) != self.j_samples or self.j_samples < 1:
            raise ValueError(f"j_samples must be an integer >= 1, got {self.j_samples}")
        check_positive("snr_floor_lin", self.snr_floor_lin)


@dataclass(frozen=True)
class SnrSampleSet:
    """Measured per-block SNRs at the sensing node, in dB, in block order."""

    samples_db: np.ndarray

    def __post_init__(self):
        arr = np.atleast_1d(np.asarray(self.samples_db, dtype=np.float64)).ravel()
        if arr.size == 0:
            raise EmptySampleSetError("an SnrSampleSet needs at least one sample")
        if not np.all(np.isfinite(arr)):
            raise ValueError("SNR samples must all be finite")
        object.__setattr__(self, "samples_db", arr)

    @property
    def k_count(self) -> int:
        return int(self.samples_db.size)

    def __len__(self) -> int:
        return self.k_count


def clpc_power_dbm(cfg: PrimaryConfig, g0_db: float, h0_sq):
    """Transmit power (dBm) that pins the receiver SNR at the target under this fade.

    Closed-loop control inverts the instantaneous channel, so substituting the
    result back into pr_snr_db returns gamma_t_db exactly. With
    ``clip_at_p_max`` the power is additionally capped (off by default; the
    estimators assume an uncapped loop).
    """
    h = np.asarray(h0_sq, dtype=np.float64)
    if np.any(h <= 0.0):
        raise ZeroFadingError("h0_sq must be > 0")
    p0 = cfg.gamma_t_db + cfg.sigma2_dbm - g0_db - 10.0 * np.log10(h)
    if cfg.clip_at_p_max:
        p0 = np.minimum(p0, cfg.p_max_dbm)
    return p0 if h.ndim else float(p0)


def pr_snr_db(cfg: PrimaryConfig, g0_db: float, h0_sq, p0_dbm):
    """SNR at the primary receiver (dB) for a given transmit power."""
    h = np.asarray(h0_sq, dtype=np.float64)
    if np.any(h <= 0.0):
        raise ZeroFadingError("h0_sq must be > 0")
    out = 10.0 * np.log10(h) + g0_db + np.asarray(p0_dbm, dtype=np.float64) - cfg.sigma2_dbm
    return out if out.ndim else float(out)


def ct_true_snr_db(cfg: PrimaryConfig, g0_db: float, g1_db: float, fading: BlockFading):
    """Noise-free per-block SNR of the overheard primary signal at the sensing node.

    Power control makes the transmit power track 1/(g0*|h0|^2), so the sensed
    SNR depends on the gains only through gamma_t_db + g1_db - g0_db plus the
    fading-power ratio in dB.
    """
    h0 = np.asarray(fading.h0_sq, dtype=np.float64)
    h1 = np.asarray(fading.h1_sq, dtype=np.float64)
    out = cfg.gamma_t_db + g1_db - g0_db + 10.0 * np.log10(h1 / h0)
    return out if out.ndim else float(out)


def measure_snr_db(true_snr_db, meas: MeasurementConfig, rng):
    """Energy-detector estimate (dB) of an SNR from j_samples received symbols.

    The detector averages |sqrt(snr)*s + w|^2 over unit-power symbols s and
    unit-variance complex Gaussian noise w, subtracts the known noise power,
    floors the result at snr_floor_lin, and reports it in dB. The average
    energy is drawn from its exact sampling law: a noncentral chi-square with
    2*j_samples degrees of freedom, scaled to unit noise power. Unbiased in
    linear scale before the floor; converges to the true SNR as j_samples
    grows.
    """
    gen = as_generator(rng)
    snr = np.asarray(true_snr_db, dtype=np.float64)
    gamma = 10.0 ** (snr / 10.0)
    two_j = 2.0 * float(meas.j_samples)
    size = snr.shape if snr.ndim else None
    energy = gen.noncentral_chisquare(two_j, two_j * gamma, size=size) / two_j
    est = np.maximum(energy - 1.0, meas.snr_floor_lin)
    out = 10.0 * np.log10(est)
    return out if snr.ndim else float(out)


def simulate_sample_set(cfg: PrimaryConfig, meas, k_blocks: int, rng) -> SnrSampleSet:
    """Simulate k_blocks independent sensed-SNR measurements.

    Each block draws fresh fading for both links, forms the true sensed SNR
    under power control, and measures it. Pass ``meas=None`` for ideal
    (noise-free) measurements. Draw order per stream is fixed: h0 vector,
    h1 vector, then the measurement energies.
    """
    k = int(k_blocks)
    if k < 1:
        raise ValueError(f"k_blocks must be >= 1, got {k_blocks}")
    gen = as_generator(rng)
    fading = sample_block_fading(gen, size=k)
    g0_db = large_scale_gain_db(cfg.geometry.d0_km)
    g1_db = large_scale_gain_db(cfg.geometry.d1_km)
    true_snr = ct_true_snr_db(cfg, g0_db, g1_db, fading)
    if meas is None:
        return SnrSampleSet(true_snr)
    return SnrSampleSet(measure_snr_db(true_snr, meas, gen))
