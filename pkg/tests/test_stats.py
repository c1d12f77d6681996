import math

import numpy as np
import pytest
from scipy.integrate import quad

from gainsense import (
    NegativeRatioError,
    RngStream,
    SnrLawParams,
    log_likelihood,
    ratio_cdf,
    score_f1,
    simulate_sample_set,
    snr_cdf_db,
    snr_median_db,
    snr_pdf_db,
)
from gainsense.errors import EmptySampleSetError
from gainsense.link import PrimaryConfig

PAPER_LAW = SnrLawParams(gamma_t_db=10.0, g1_db=-90.4, g0_db=-105.36254432606862)
MEDIAN = snr_median_db(PAPER_LAW)


def test_ratio_cdf_values():
    assert ratio_cdf(0.0) == 0.0
    assert ratio_cdf(1.0) == 0.5
    assert ratio_cdf(3.0) == 0.75
    assert np.allclose(ratio_cdf(np.array([0.0, 1.0, 3.0])), [0.0, 0.5, 0.75])


def test_ratio_cdf_monotone_and_bounded():
    grid = np.linspace(0, 1e6, 1000)
    vals = ratio_cdf(grid)
    assert np.all(np.diff(vals) > 0)
    assert vals[0] == 0.0 and vals[-1] < 1.0


def test_ratio_cdf_rejects_negative():
    with pytest.raises(NegativeRatioError):
        ratio_cdf(-0.1)


def test_snr_median():
    # direct substitution: 10 - 90.4 + 105.36254432606862
    assert MEDIAN == pytest.approx(24.96254432606861, abs=1e-9)
    same_gain = SnrLawParams(10.0, -100.0, -100.0)
    assert snr_median_db(same_gain) == pytest.approx(10.0, abs=1e-12)
    assert snr_cdf_db(MEDIAN, PAPER_LAW) == pytest.approx(0.5, abs=1e-12)


def test_snr_cdf_values_and_limits():
    assert snr_cdf_db(MEDIAN + 10.0, PAPER_LAW) == pytest.approx(10.0 / 11.0, abs=1e-9)
    assert snr_cdf_db(-1e6, PAPER_LAW) == 0.0
    assert snr_cdf_db(1e6, PAPER_LAW) == 1.0
    grid = np.linspace(MEDIAN - 60, MEDIAN + 60, 500)
    assert np.all(np.diff(snr_cdf_db(grid, PAPER_LAW)) > 0)


def test_snr_pdf_peak_value():
    # ln(10)/40 at the median
    assert snr_pdf_db(MEDIAN, PAPER_LAW) == pytest.approx(0.057564627324851146, abs=1e-12)


def test_snr_pdf_symmetry():
    for x in (5.0, 0.5, 17.0, 42.0):
        assert snr_pdf_db(MEDIAN + x, PAPER_LAW) == pytest.approx(
            snr_pdf_db(MEDIAN - x, PAPER_LAW), rel=1e-12
        )


def test_snr_pdf_integrates_to_one():
    # quadrature oracle over [median-80, median+80]
    total, err = quad(lambda x: snr_pdf_db(x, PAPER_LAW), MEDIAN - 80, MEDIAN + 80, limit=200)
    assert err < 1e-9
    assert total == pytest.approx(1.0, abs=1e-6)


def test_snr_pdf_is_cdf_derivative():
    rng = np.random.default_rng(12)
    xs = MEDIAN + rng.uniform(-30, 30, size=100)
    h = 1e-4
    fd = (snr_cdf_db(xs + h, PAPER_LAW) - snr_cdf_db(xs - h, PAPER_LAW)) / (2 * h)
    assert np.allclose(snr_pdf_db(xs, PAPER_LAW), fd, atol=1e-6)


def test_log_likelihood_single_sample_at_median():
    # log10 of the pdf peak, oracle value log10(ln(10)/40)
    value = log_likelihood([MEDIAN], PAPER_LAW.g0_db, PAPER_LAW.gamma_t_db, PAPER_LAW.g1_db)
    assert value == pytest.approx(math.log10(math.log(10.0) / 40.0), abs=1e-12)
    assert value == pytest.approx(-1.239844302628499, abs=1e-9)


def test_log_likelihood_matches_log_of_pdf_product():
    rng = np.random.default_rng(5)
    samples = MEDIAN + rng.uniform(-20, 20, size=12)
    direct = float(np.sum(np.log10(snr_pdf_db(samples, PAPER_LAW))))
    value = log_likelihood(samples, PAPER_LAW.g0_db, PAPER_LAW.gamma_t_db, PAPER_LAW.g1_db)
    assert value == pytest.approx(direct, abs=1e-9)


def test_log_likelihood_additivity():
    rng = np.random.default_rng(6)
    s1 = MEDIAN + rng.uniform(-15, 15, size=7)
    s2 = MEDIAN + rng.uniform(-15, 15, size=9)
    args = (PAPER_LAW.g0_db, PAPER_LAW.gamma_t_db, PAPER_LAW.g1_db)
    assert log_likelihood(np.concatenate([s1, s2]), *args) == pytest.approx(
        log_likelihood(s1, *args) + log_likelihood(s2, *args), rel=1e-12
    )


def test_log_likelihood_rejects_empty():
    with pytest.raises(EmptySampleSetError):
        log_likelihood([], -100.0, 10.0, -90.4)
    with pytest.raises(EmptySampleSetError):
        score_f1([], -100.0, 10.0, -90.4)


def test_score_limits():
    rng = np.random.default_rng(7)
    samples = MEDIAN + rng.uniform(-10, 10, size=25)
    k = samples.size
    args = (PAPER_LAW.gamma_t_db, PAPER_LAW.g1_db)
    assert score_f1(samples, -405.0, *args) == pytest.approx(k / 10.0, abs=1e-12)
    assert score_f1(samples, 195.0, *args) == pytest.approx(-k / 10.0, abs=1e-12)


def test_score_single_sample_root():
    sample = 24.0
    root = PAPER_LAW.gamma_t_db + PAPER_LAW.g1_db - sample
    assert score_f1([sample], root, PAPER_LAW.gamma_t_db, PAPER_LAW.g1_db) == pytest.approx(
        0.0, abs=1e-15
    )


def test_score_monotone_non_increasing():
    rng = np.random.default_rng(8)
    samples = MEDIAN + 8.0 * rng.standard_normal(40)
    g0_grid = np.linspace(-140, -60, 400)
    vals = [score_f1(samples, g, PAPER_LAW.gamma_t_db, PAPER_LAW.g1_db) for g in g0_grid]
    assert all(a >= b - 1e-12 for a, b in zip(vals, vals[1:]))


def test_score_is_likelihood_derivative():
    rng = np.random.default_rng(9)
    h = 1e-5
    for _ in range(100):
        samples = MEDIAN + rng.uniform(-25, 25, size=rng.integers(1, 30))
        g0 = rng.uniform(-120, -90)
        fd = (
            log_likelihood(samples, g0 + h, PAPER_LAW.gamma_t_db, PAPER_LAW.g1_db)
            - log_likelihood(samples, g0 - h, PAPER_LAW.gamma_t_db, PAPER_LAW.g1_db)
        ) / (2 * h)
        assert score_f1(samples, g0, PAPER_LAW.gamma_t_db, PAPER_LAW.g1_db) == pytest.approx(
            fd, abs=1e-6
        )


def test_noiseless_simulation_passes_ks_against_cdf():
    n = 100_000
    cfg = PrimaryConfig()
    ss = simulate_sample_set(cfg, None, n, RngStream(2718, 0))
    ordered = np.sort(ss.samples_db)
    cdf = snr_cdf_db(ordered, PAPER_LAW)
    grid = np.arange(1, n + 1) / n
    ks = max(np.max(np.abs(grid - cdf)), np.max(np.abs(grid - 1.0 / n - cdf)))
    assert ks < 1.63 / math.sqrt(n)  # 1% critical value
