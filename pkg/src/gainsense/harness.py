"""Deterministic Monte Carlo driver for estimator error, SNR, and timing sweeps.

Every sweep point runs ``trials`` independent trials; trial t always draws
from the stream ``RngStream(master_seed, t)``, so results do not depend on
execution order or thread count. Per-trial results are collected into arrays
and reduced with numpy's pairwise summation, keeping the reduction order
fixed as well.
"""

from dataclasses import dataclass, field

import numpy as np

from .channel import Geometry, large_scale_gain_db
from .errors import InvalidThetaError
from .estimators import SolverConfig, mb_estimate, ml_estimate
from .interference import ItempParams, interference_temperature
from .link import (
    DEFAULT_SNR_FLOOR_LIN,
    MeasurementConfig,
    PrimaryConfig,
    simulate_sample_set,
)
from .units import RngStream, db_to_lin, lin_to_db
from .validation import check_finite

#: sweep axis driven by each scenario
SCENARIO_AXES = {
    "error_vs_d1": "d1",
    "snr_vs_d1": "d1",
    "imperfect_vs_d1": "d1",
    "error_vs_d0": "d0",
    "snr_vs_d0": "d0",
    "error_vs_k": "k",
    "timing_vs_k": "k",
    "imperfect_vs_k": "k",
    "itemp_report": "d0",
}

#: scenarios whose error columns report the interference-budget error instead
_ITEMP_SCENARIOS = frozenset({"itemp_report"})

D_GRID = tuple(round(0.10 + 0.05 * i, 2) for i in range(9))  # 0.10 .. 0.50 km
K_GRID = (10, 20, 50, 100, 200, 500, 1000)

CSV_HEADER = "x,ml_err_db,mb_err_db,avg_ct_snr_db,ml_time_ns,mb_time_ns,clamp_count"

_WARMUP_CALLS = 100


def default_sweep(scenario: str):
    """Default sweep grid for a scenario: distances in km or block counts."""
    axis = SCENARIO_AXES.get(scenario)
    if axis is None:
        raise ValueError(f"unknown scenario {scenario!r}")
    return K_GRID if axis == "k" else D_GRID


@dataclass(frozen=True)
class KnowledgeError:
    """Half-widths (dB) of uniform errors on what the sensing node believes.

    Zero means perfect knowledge of that quantity. Perturbing only
    gamma_t_bound_db is the single-error case; perturbing both is the
    double-error case.
    """

    gamma_t_bound_db: float = 0.0
    g1_bound_db: float = 0.0

    def __post_init__(self):
        if self.gamma_t_bound_db < 0.0 or self.g1_bound_db < 0.0:
            raise ValueError("knowledge-error bounds must be >= 0")


@dataclass(frozen=True)
class ExperimentSpec:
    """Everything one sweep needs; equal specs give identical results."""

    scenario: str
    sweep: tuple | None = None  # None selects the scenario's default grid
    trials: int = 10_000
    k_blocks: int = 100
    j_samples: int = 100
    master_seed: int = 0
    d0_km: float = 0.25
    d1_km: float = 0.1
    r_km: float = 0.5
    gamma_t_db: float = 10.0
    sigma2_dbm: float = -114.0
    nu_db: float = 0.1
    snr_floor_lin: float = DEFAULT_SNR_FLOOR_LIN
    knowledge_error: KnowledgeError = field(default_factory=KnowledgeError)
    p_max_dbm: float = 46.0
    theta: float = 0.1

    def __post_init__(self):
        if self.scenario not in SCENARIO_AXES:
            raise ValueError(
                f"unknown scenario {self.scenario!r}; expected one of {sorted(SCENARIO_AXES)}"
            )
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        sweep = self.sweep if self.sweep is not None else default_sweep(self.scenario)
        sweep = tuple(float(v) for v in sweep)
        if not sweep:
            raise ValueError("sweep must be non-empty")
        object.__setattr__(self, "sweep", sweep)
        if not 0.0 < self.theta < 1.0:
            raise InvalidThetaError(f"theta must lie in (0, 1), got {self.theta!r}")


@dataclass(frozen=True)
class CurvePoint:
    """Aggregates of one sweep point: mean |error| per estimator, mean measured SNR
    (dB-domain average), mean per-estimate wall times, and how many trials hit the
    solver bracket."""

    x: float
    ml_err_db: float
    mb_err_db: float
    avg_ct_snr_db: float
    ml_time_ns: float
    mb_time_ns: float
    clamp_count: int


def estimation_error_db(g0_hat_db: float, g0_true_db: float) -> float:
    """Absolute estimation error |estimate - truth| in dB."""
    return abs(check_finite("g0_hat_db", g0_hat_db) - check_finite("g0_true_db", g0_true_db))


def _budget_err_db(spec: ExperimentSpec, g0_hat_db: float, true_budget_mw: float) -> float:
    """dB error of the interference budget (admissible interference + noise power)
    implied by an estimated gain, against the budget from the true gain."""
    params = ItempParams(spec.p_max_dbm, spec.theta, spec.gamma_t_db,
                         spec.sigma2_dbm, g0_hat_db)
    budget = interference_temperature(params) + db_to_lin(spec.sigma2_dbm)
    return abs(lin_to_db(budget) - lin_to_db(true_budget_mw))


def _run_point(spec: ExperimentSpec, axis: str, x: float,
               meas: MeasurementConfig, itemp: bool) -> CurvePoint:
    d0, d1, k = spec.d0_km, spec.d1_km, spec.k_blocks
    if axis == "d1":
        d1 = x
    elif axis == "d0":
        d0 = x
    else:
        k = int(x)
    cfg = PrimaryConfig(spec.gamma_t_db, spec.sigma2_dbm,
                        Geometry(d0, d1, spec.r_km), spec.p_max_dbm)
    g0_true = large_scale_gain_db(d0)
    g1_true = large_scale_gain_db(d1)
    solver = SolverConfig.from_radius(spec.r_km, spec.nu_db)
    bounds = spec.knowledge_error

    if itemp:
        true_budget = interference_temperature(
            ItempParams(spec.p_max_dbm, spec.theta, spec.gamma_t_db,
                        spec.sigma2_dbm, g0_true)
        ) + db_to_lin(spec.sigma2_dbm)

    # timing warm-up on throwaway data (stream index `trials` is never a trial)
    warm = simulate_sample_set(cfg, meas, k, RngStream(spec.master_seed, spec.trials))
    for _ in range(_WARMUP_CALLS):
        ml_estimate(warm, spec.gamma_t_db, g1_true, solver)
        mb_estimate(warm, spec.gamma_t_db, g1_true)

    n = spec.trials
    ml_err = np.empty(n)
    mb_err = np.empty(n)
    avg_snr = np.empty(n)
    ml_ns = np.empty(n)
    mb_ns = np.empty(n)
    clamp_count = 0
    for t in range(n):
        rng = RngStream(spec.master_seed, t)
        gamma_t_known = spec.gamma_t_db
        g1_known = g1_true
        if bounds.gamma_t_bound_db > 0.0:
            b = bounds.gamma_t_bound_db
            gamma_t_known += rng.generator.uniform(-b, b)
        if bounds.g1_bound_db > 0.0:
            b = bounds.g1_bound_db
            g1_known += rng.generator.uniform(-b, b)
        samples = simulate_sample_set(cfg, meas, k, rng)
        rep_ml = ml_estimate(samples, gamma_t_known, g1_known, solver)
        rep_mb = mb_estimate(samples, gamma_t_known, g1_known)
        if itemp:
            ml_err[t] = _budget_err_db(spec, rep_ml.g0_hat_db, true_budget)
            mb_err[t] = _budget_err_db(spec, rep_mb.g0_hat_db, true_budget)
        else:
            ml_err[t] = estimation_error_db(rep_ml.g0_hat_db, g0_true)
            mb_err[t] = estimation_error_db(rep_mb.g0_hat_db, g0_true)
        avg_snr[t] = np.mean(samples.samples_db)
        ml_ns[t] = rep_ml.elapsed_ns
        mb_ns[t] = rep_mb.elapsed_ns
        clamp_count += rep_ml.clamped
    return CurvePoint(
        x=float(x),
        ml_err_db=float(np.mean(ml_err)),
        mb_err_db=float(np.mean(mb_err)),
        avg_ct_snr_db=float(np.mean(avg_snr)),
        ml_time_ns=float(np.mean(ml_ns)),
        mb_time_ns=float(np.mean(mb_ns)),
        clamp_count=clamp_count,
    )


def run_experiment(spec: ExperimentSpec) -> list[CurvePoint]:
    """Run one sweep; returns one CurvePoint per sweep value, in sweep order.

    All stochastic outputs are a pure function of the spec (see module
    docstring); wall-time columns are real measurements and therefore vary
    from run to run.
    """
    axis = SCENARIO_AXES[spec.scenario]
    itemp = spec.scenario in _ITEMP_SCENARIOS
    meas = MeasurementConfig(spec.j_samples, spec.snr_floor_lin)
    return [_run_point(spec, axis, x, meas, itemp) for x in spec.sweep]


def write_curve_csv(points, path) -> None:
    """Write sweep results as CSV with 6 significant digits per number.

    Output bytes are a pure function of the points (LF newlines, fixed
    header); an empty list produces a header-only file.
    """
    lines = [CSV_HEADER]
    for p in points:
        lines.append(
            f"{p.x:.6g},{p.ml_err_db:.6g},{p.mb_err_db:.6g},{p.avg_ct_snr_db:.6g},"
            f"{p.ml_time_ns:.6g},{p.mb_time_ns:.6g},{p.clamp_count:d}"
        )
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write("\n".join(lines) + "\n")
