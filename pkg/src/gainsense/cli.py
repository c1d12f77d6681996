"""Command-line interface: Monte Carlo sweeps, one-shot estimation, interference budget.

Exit codes: 0 on success, 2 for invalid arguments or malformed input data,
3 for I/O failures.
"""

import argparse
import csv
import sys

import numpy as np

from .estimators import SolverConfig, mb_estimate, ml_estimate
from .harness import (
    SCENARIO_AXES,
    ExperimentSpec,
    KnowledgeError,
    run_experiment,
    write_curve_csv,
)
from .interference import ItempParams, interference_temperature, outage_probability
from .units import lin_to_db


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gainsense",
        description="Estimate the primary-link channel gain from sensed SNRs "
                    "and size the interference budget.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="run a Monte Carlo sweep and write a CSV curve")
    sweep.add_argument("--scenario", required=True, choices=sorted(SCENARIO_AXES))
    sweep.add_argument("--trials", type=int, default=10_000)
    sweep.add_argument("--seed", type=int, default=0)
    sweep.add_argument("--out", required=True, help="output CSV path")
    sweep.add_argument("--d0", type=float, default=0.25, help="primary-pair distance, km")
    sweep.add_argument("--d1", type=float, default=0.1, help="transmitter-to-sensor distance, km")
    sweep.add_argument("--k", type=int, default=100, help="measured blocks per trial")
    sweep.add_argument("--j", type=int, default=100, help="symbols per SNR measurement")
    sweep.add_argument("--gamma-t", type=float, default=10.0, help="target SNR, dB")
    sweep.add_argument("--sigma2", type=float, default=-114.0, help="noise power, dBm")
    sweep.add_argument("--radius", type=float, default=0.5, help="coverage radius, km")
    sweep.add_argument("--nu", type=float, default=0.1, help="bisection tolerance, dB")
    sweep.add_argument("--gt-err", type=float, default=0.0,
                       help="half-width of uniform error on the known target SNR, dB")
    sweep.add_argument("--g1-err", type=float, default=0.0,
                       help="half-width of uniform error on the known sensing gain, dB")

    est = sub.add_parser("estimate", help="estimate the gain from a CSV of measured SNRs")
    est.add_argument("--input", required=True, help="CSV with a single gamma_c_db column")
    est.add_argument("--method", required=True, choices=["ml", "mb"])
    est.add_argument("--gamma-t", type=float, required=True, help="target SNR, dB")
    est.add_argument("--g1", type=float, required=True, help="sensing-link gain, dB")
    est.add_argument("--nu", type=float, default=0.1, help="bisection tolerance, dB")

    itemp = sub.add_parser("itemp", help="interference budget for a given primary gain")
    itemp.add_argument("--g0", type=float, required=True, help="primary-link gain, dB")
    itemp.add_argument("--pmax", type=float, required=True, help="maximum transmit power, dBm")
    itemp.add_argument("--theta", type=float, required=True, help="outage target in (0, 1)")
    itemp.add_argument("--gamma-t", type=float, required=True, help="target SNR, dB")
    itemp.add_argument("--sigma2", type=float, required=True, help="noise power, dBm")
    return parser


def _read_samples_csv(path) -> np.ndarray:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip() for h in header] != ["gamma_c_db"]:
            raise ValueError(
                f"{path}: expected a single-column CSV with header 'gamma_c_db'"
            )
        values = []
        for row in reader:
            if not row or (len(row) == 1 and not row[0].strip()):
                continue
            if len(row) != 1:
                raise ValueError(f"{path}: expected one value per row, got {row!r}")
            values.append(float(row[0]))
    if not values:
        raise ValueError(f"{path}: no samples found")
    return np.asarray(values, dtype=np.float64)


def _cmd_sweep(args) -> int:
    spec = ExperimentSpec(
        scenario=args.scenario,
        trials=args.trials,
        master_seed=args.seed,
        k_blocks=args.k,
        j_samples=args.j,
        d0_km=args.d0,
        d1_km=args.d1,
        r_km=args.radius,
        gamma_t_db=args.gamma_t,
        sigma2_dbm=args.sigma2,
        nu_db=args.nu,
        knowledge_error=KnowledgeError(args.gt_err, args.g1_err),
    )
    points = run_experiment(spec)
    write_curve_csv(points, args.out)
    print(f"wrote {len(points)} sweep points to {args.out}")
    return 0


def _cmd_estimate(args) -> int:
    samples = _read_samples_csv(args.input)
    if args.method == "ml":
        report = ml_estimate(samples, args.gamma_t, args.g1,
                             SolverConfig.from_radius(0.5, args.nu))
    else:
        report = mb_estimate(samples, args.gamma_t, args.g1)
    print(f"g0_hat_db={report.g0_hat_db:.6g}")
    print(f"method={report.method}")
    print(f"k={samples.size}")
    print(f"iterations={report.iterations}")
    if report.residual_score is not None:
        print(f"residual_score={report.residual_score:.6g}")
    print(f"clamped={report.clamped}")
    print(f"elapsed_ns={report.elapsed_ns}")
    return 0


def _cmd_itemp(args) -> int:
    params = ItempParams(
        p_max_dbm=args.pmax,
        theta=args.theta,
        gamma_t_db=args.gamma_t,
        sigma2_dbm=args.sigma2,
        g0_db=args.g0,
    )
    p_i = interference_temperature(params)
    print(f"p_i_mw={p_i:.6g}")
    if p_i > 0.0:
        print(f"p_i_dbm={lin_to_db(p_i):.6g}")
    else:
        print("p_i_dbm=-inf")
    print(f"outage_probability={outage_probability(params, p_i):.6g}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles --help (0) and bad usage (2)
        return int(exc.code or 0)
    try:
        if args.command == "sweep":
            return _cmd_sweep(args)
        if args.command == "estimate":
            return _cmd_estimate(args)
        return _cmd_itemp(args)
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
