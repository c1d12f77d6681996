"""Primary-channel-gain estimation from sensed SNRs for spectrum sharing.

A cognitive transmitter that overhears a power-controlled primary link can
infer the primary-pair channel gain from the SNRs it measures, then size how
much interference the primary receiver tolerates. This package provides the
channel and measurement simulation, the analytic SNR law, a maximum-likelihood
estimator (bisection), a median-based closed-form estimator, the
interference-budget calculator, and a deterministic Monte Carlo harness
with a CLI.
"""

from .channel import (
    DEFAULT_PATH_LOSS,
    BlockFading,
    Geometry,
    PathLossModel,
    gain_bounds_db,
    large_scale_gain_db,
    path_loss_db,
    sample_block_fading,
)
from .errors import (
    DistanceTooSmallError,
    EmptySampleSetError,
    InvalidRadiusError,
    InvalidThetaError,
    NegativeInterferenceError,
    NegativeRatioError,
    NonPositiveValueError,
    ZeroFadingError,
)
from .estimators import (
    DEFAULT_SOLVER,
    EstimateReport,
    MedianChannelGainEstimator,
    MLChannelGainEstimator,
    SolverConfig,
    mb_estimate,
    ml_estimate,
    sample_median_db,
)
from .harness import (
    CSV_HEADER,
    D_GRID,
    K_GRID,
    SCENARIO_AXES,
    CurvePoint,
    ExperimentSpec,
    KnowledgeError,
    default_sweep,
    estimation_error_db,
    run_experiment,
    write_curve_csv,
)
from .interference import ItempParams, interference_temperature, outage_probability
from .link import (
    DEFAULT_SNR_FLOOR_LIN,
    MeasurementConfig,
    PrimaryConfig,
    SnrSampleSet,
    clpc_power_dbm,
    ct_true_snr_db,
    measure_snr_db,
    pr_snr_db,
    simulate_sample_set,
)
from .stats import (
    SnrLawParams,
    log_likelihood,
    ratio_cdf,
    score_f1,
    snr_cdf_db,
    snr_median_db,
    snr_pdf_db,
)
from .units import Db, Lin, RngStream, as_generator, db_to_lin, lin_to_db

__version__ = "0.1.0"

__all__ = [
    "BlockFading",
    "CSV_HEADER",
    "CurvePoint",
    "D_GRID",
    "DEFAULT_PATH_LOSS",
    "DEFAULT_SNR_FLOOR_LIN",
    "DEFAULT_SOLVER",
    "Db",
    "DistanceTooSmallError",
    "EmptySampleSetError",
    "EstimateReport",
    "ExperimentSpec",
    "Geometry",
    "InvalidRadiusError",
    "InvalidThetaError",
    "ItempParams",
    "K_GRID",
    "KnowledgeError",
    "Lin",
    "MLChannelGainEstimator",
    "MeasurementConfig",
    "MedianChannelGainEstimator",
    "NegativeInterferenceError",
    "NegativeRatioError",
    "NonPositiveValueError",
    "PathLossModel",
    "PrimaryConfig",
    "RngStream",
    "SCENARIO_AXES",
    "SnrLawParams",
    "SnrSampleSet",
    "SolverConfig",
    "ZeroFadingError",
    "as_generator",
    "clpc_power_dbm",
    "ct_true_snr_db",
    "db_to_lin",
    "default_sweep",
    "estimation_error_db",
    "gain_bounds_db",
    "interference_temperature",
    "large_scale_gain_db",
    "lin_to_db",
    "log_likelihood",
    "mb_estimate",
    "measure_snr_db",
    "ml_estimate",
    "outage_probability",
    "path_loss_db",
    "pr_snr_db",
    "ratio_cdf",
    "run_experiment",
    "sample_block_fading",
    "sample_median_db",
    "score_f1",
    "simulate_sample_set",
    "snr_cdf_db",
    "snr_median_db",
    "snr_pdf_db",
    "write_curve_csv",
]
