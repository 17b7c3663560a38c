"""Command-line front end: distance-curve, ehrenfest, transition, oracle-validate.

Every command is a pure function of its flags and seed: reruns write byte
identical data files. Timing goes to stderr only. Exit codes: 0 success,
2 invalid flags or parameters, 3 I/O failure (1 for oracle-validate check
failures).
"""

import argparse
import re
import sys
import time

import numpy as np

from . import __version__
from .experiments import (
    averaged_distance_curve,
    default_threads,
    ehrenfest_scan,
    transition_compare,
)
from .floquet import KickedTopConfig
from .output import write_csv, write_json
from .sampling import EnsembleConfig, PerturbationSpec, run_rng, sample_axis
from .validate import validation_battery

_ANGLE_RE = re.compile(r"^([+-]?)(\d+\.?\d*|\.\d+)?\*?pi(?:/(\d+\.?\d*|\.\d+))?$")


def parse_angle(text):
    """Radians from a float literal or a pi expression like 'pi/2' or '0.5pi'."""
    text = text.strip().replace(" ", "")
    try:
        return float(text)
    except ValueError:
        pass
    match = _ANGLE_RE.match(text)
    if not match:
        raise argparse.ArgumentTypeError(f"cannot parse angle {text!r} (try e.g. 1.57 or pi/2)")
    sign, coef, div = match.groups()
    value = float(coef) * np.pi if coef else np.pi
    if div:
        value /= float(div)
    return -value if sign == "-" else value


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _int_list(text):
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"cannot parse integer list {text!r}") from exc


def _echo(config, ensemble, steps):
    return {
        "n": config.n,
        "alpha": config.alpha,
        "beta": config.beta,
        "phi": ensemble.angle,
        "axis_mode": ensemble.axis_mode,
        "steps": steps,
        "runs": ensemble.runs,
        "master_seed": ensemble.master_seed,
        "version": __version__,
    }


def cmd_distance_curve(args):
    ensemble = EnsembleConfig(
        master_seed=args.seed, runs=args.runs, angle=args.phi, axis_mode=args.axis
    )
    config = KickedTopConfig(n=args.n, alpha=args.alpha, beta=args.beta)
    start = time.perf_counter()
    curve = averaged_distance_curve(config, ensemble, args.steps, threads=args.threads)
    elapsed = time.perf_counter() - start
    manifest = {
        "command": "distance-curve",
        "config": _echo(config, ensemble, args.steps),
        "columns": ["t", "D_mean", "D_sem", "S_mean"],
        "overlap_drift": curve.overlap_drift,
        "initial_distance": curve.d_mean[0],
        "peak_time": int(np.argmax(curve.d_mean)),
        "peak_height": float(np.max(curve.d_mean)),
    }
    if args.format == "json":
        path = args.out + ".json"
        manifest["curve"] = {
            "t": curve.t,
            "D_mean": curve.d_mean,
            "D_sem": curve.d_sem,
            "S_mean": curve.s_mean,
        }
        manifest["outputs"] = [path]
        write_json(path, manifest)
    else:
        csv_path = args.out + ".csv"
        json_path = args.out + ".json"
        manifest["outputs"] = [csv_path, json_path]
        write_csv(
            csv_path,
            ["t", "D_mean", "D_sem", "S_mean"],
            zip(curve.t, curve.d_mean, curve.d_sem, curve.s_mean),
        )
        write_json(json_path, manifest)
    print(f"distance-curve: {args.runs} runs x {args.steps} steps in {elapsed:.1f}s", file=sys.stderr)
    return 0


def cmd_ehrenfest(args):
    if len(args.n_list) < 2:
        args.parser.error("--n-list needs at least two system sizes to fit scaling models")
    ensemble = EnsembleConfig(
        master_seed=args.seed, runs=args.runs, angle=args.phi, axis_mode=args.axis
    )
    start = time.perf_counter()
    scan = ehrenfest_scan(
        args.alpha, args.n_list, ensemble, steps=args.steps, beta=args.beta, threads=args.threads
    )
    elapsed = time.perf_counter() - start
    csv_path = args.out + ".csv"
    json_path = args.out + ".json"
    write_csv(
        csv_path,
        ["n", "t_E", "peak_height", "at_window_edge"],
        [(p.n, p.peak_time, p.peak_height, p.at_window_edge) for p in scan.points],
    )
    write_json(
        json_path,
        {
            "command": "ehrenfest",
            "config": {
                "alpha": args.alpha,
                "beta": args.beta,
                "phi": ensemble.angle,
                "axis_mode": ensemble.axis_mode,
                "n_list": args.n_list,
                "steps": args.steps,
                "runs": ensemble.runs,
                "master_seed": ensemble.master_seed,
                "version": __version__,
            },
            "calibrations": {
                "window_rule": "50 steps for alpha >= 3, else max(50, ceil(4 sqrt(n)))",
                "peak_estimator": "discrete argmax with 3-point parabolic refinement",
            },
            "points": [
                {
                    "n": p.n,
                    "t_E": p.peak_time,
                    "peak_height": p.peak_height,
                    "at_window_edge": p.at_window_edge,
                }
                for p in scan.points
            ],
            "fits": {
                "log": {
                    "slope": scan.fit_log.slope,
                    "intercept": scan.fit_log.intercept,
                    "r_squared": scan.fit_log.r_squared,
                },
                "sqrt": {
                    "slope": scan.fit_sqrt.slope,
                    "intercept": scan.fit_sqrt.intercept,
                    "r_squared": scan.fit_sqrt.r_squared,
                },
            },
            "preferred_model": scan.preferred_model,
            "outputs": [csv_path, json_path],
        },
    )
    print(f"ehrenfest: {len(args.n_list)} sizes in {elapsed:.1f}s", file=sys.stderr)
    return 0


def cmd_transition(args):
    if len(args.theta) != len(args.phi_angle):
        args.parser.error("--theta and --phi-angle must be given the same number of times")
    config = KickedTopConfig(n=args.n, alpha=args.alpha, beta=args.beta)
    start = time.perf_counter()
    summaries = []
    outputs = []
    for i, (theta, phi) in enumerate(zip(args.theta, args.phi_angle)):
        rng = run_rng(args.seed, i)
        axis = sample_axis(rng, args.axis, theta, phi)
        record = transition_compare(
            config,
            theta,
            phi,
            PerturbationSpec(axis=axis, angle=args.phi),
            args.steps,
            classical_steps=args.classical_steps,
        )
        quantum_path = f"{args.out}_ic{i}_quantum.csv"
        classical_path = f"{args.out}_ic{i}_classical.csv"
        write_csv(quantum_path, ["t", "D"], list(zip(range(args.steps + 1), record.distance)))
        write_csv(
            classical_path,
            ["t", "x", "y", "z", "phi"],
            [
                (t, xyz[0], xyz[1], xyz[2], pz[0])
                for t, (xyz, pz) in enumerate(zip(record.classical_xyz, record.classical_phi_z))
            ],
        )
        outputs.extend([quantum_path, classical_path])
        summaries.append(
            {
                "theta": theta,
                "phi": phi,
                "axis": list(axis),
                "classification": record.probe.label,
                "max_separation": record.probe.max_separation,
                "crossing_step": record.probe.crossing_step,
                "max_distance": float(np.max(record.distance)),
                "initial_distance": float(record.distance[0]),
                "overlap_drift": record.overlap_drift,
                "quantum_csv": quantum_path,
                "classical_csv": classical_path,
            }
        )
    elapsed = time.perf_counter() - start
    json_path = args.out + ".json"
    outputs.append(json_path)
    write_json(
        json_path,
        {
            "command": "transition",
            "config": {
                "n": config.n,
                "alpha": config.alpha,
                "beta": config.beta,
                "phi": args.phi,
                "axis_mode": args.axis,
                "steps": args.steps,
                "classical_steps": args.classical_steps,
                "master_seed": args.seed,
                "version": __version__,
            },
            "calibrations": {
                "chaos_proxy": "two-point divergence, displacement 1e-8, threshold 1e-2, 200 steps",
            },
            "initial_conditions": summaries,
            "outputs": outputs,
        },
    )
    print(f"transition: {len(args.theta)} initial conditions in {elapsed:.1f}s", file=sys.stderr)
    return 0


def cmd_oracle_validate(args):
    if args.n > 8:
        args.parser.error(f"--n {args.n} exceeds the oracle bound of 8 qubits")
    if args.n < 2:
        args.parser.error("--n must be at least 2")
    results = validation_battery(
        args.n, args.seed, draws=args.draws, steps=args.steps, corrupt_kick=args.corrupt_kick
    )
    for check in results:
        status = "PASS" if check.passed else "FAIL"
        print(f"{status}  {check.name}: residual={check.residual:.3e} (tol {check.tolerance:g})")
    failed = [c for c in results if not c.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 1 if failed else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qhdtop",
        description="Kicked-top hypersensitivity experiments with the quantum Hamming distance",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, runs_default=100):
        p.add_argument("--n", type=_positive_int, required=True, help="qubit count")
        p.add_argument("--alpha", type=float, required=True, help="kick strength")
        p.add_argument("--beta", type=parse_angle, default=np.pi / 2, help="precession angle (default pi/2)")
        p.add_argument("--phi", type=parse_angle, default=0.01, help="perturbation angle (default 0.01)")
        p.add_argument("--seed", type=int, default=0, help="master seed (default 0)")
        p.add_argument("--axis", choices=["perp", "sphere"], default="perp", help="perturbation-axis sampling")
        p.add_argument("--out", required=True, help="output base path (extensions appended)")

    p = sub.add_parser("distance-curve", help="ensemble-averaged distance and entropy curves")
    add_common(p)
    p.add_argument("--steps", type=_positive_int, required=True, help="Floquet steps")
    p.add_argument("--runs", type=_positive_int, default=100, help="ensemble size (default 100)")
    p.add_argument("--format", choices=["csv", "json"], default="csv", help="data file format")
    p.add_argument("--threads", type=_positive_int, default=None, help="worker cap (QHD_THREADS env fallback)")
    p.set_defaults(func=cmd_distance_curve, parser=p)

    p = sub.add_parser("ehrenfest", help="peak-time scaling across system sizes")
    p.add_argument("--alpha", type=float, required=True, help="kick strength")
    p.add_argument("--n-list", type=_int_list, required=True, help="comma-separated qubit counts")
    p.add_argument("--beta", type=parse_angle, default=np.pi / 2, help="precession angle (default pi/2)")
    p.add_argument("--phi", type=parse_angle, default=0.01, help="perturbation angle (default 0.01)")
    p.add_argument("--steps", type=_positive_int, default=None, help="scan window (default: regime rule)")
    p.add_argument("--runs", type=_positive_int, default=100, help="ensemble size (default 100)")
    p.add_argument("--seed", type=int, default=0, help="master seed (default 0)")
    p.add_argument("--axis", choices=["perp", "sphere"], default="perp", help="perturbation-axis sampling")
    p.add_argument("--out", required=True, help="output base path (extensions appended)")
    p.add_argument("--threads", type=_positive_int, default=None, help="worker cap (QHD_THREADS env fallback)")
    p.set_defaults(func=cmd_ehrenfest, parser=p)

    p = sub.add_parser("transition", help="single-run distance vs classical trajectory")
    p.add_argument("--n", type=_positive_int, required=True, help="qubit count")
    p.add_argument("--alpha", type=float, required=True, help="kick strength")
    p.add_argument("--beta", type=parse_angle, default=np.pi / 2, help="precession angle (default pi/2)")
    p.add_argument("--theta", type=parse_angle, action="append", required=True,
                   help="initial Bloch polar angle (repeatable)")
    p.add_argument("--phi-angle", type=parse_angle, action="append", required=True,
                   help="initial Bloch azimuth (repeatable, paired with --theta)")
    p.add_argument("--phi", type=parse_angle, default=0.01, help="perturbation angle (default 0.01)")
    p.add_argument("--steps", type=_positive_int, default=100, help="Floquet steps (default 100)")
    p.add_argument("--classical-steps", type=_positive_int, default=None,
                   help="classical trajectory length (default: same as --steps)")
    p.add_argument("--seed", type=int, default=0, help="master seed for the axis draw (default 0)")
    p.add_argument("--axis", choices=["perp", "sphere"], default="perp", help="perturbation-axis sampling")
    p.add_argument("--out", required=True, help="output base path (extensions appended)")
    p.set_defaults(func=cmd_transition, parser=p)

    p = sub.add_parser("oracle-validate", help="fast paths vs full-space oracle (n <= 8)")
    p.add_argument("--n", type=_positive_int, required=True, help="qubit count (2..8)")
    p.add_argument("--seed", type=int, default=0, help="master seed (default 0)")
    p.add_argument("--draws", type=_positive_int, default=5, help="random parameter draws (default 5)")
    p.add_argument("--steps", type=_positive_int, default=50, help="Floquet steps per draw (default 50)")
    p.add_argument("--corrupt-kick", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_oracle_validate, parser=p)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "threads", None) is None and hasattr(args, "threads"):
        args.threads = default_threads()
    try:
        return args.func(args)
    except ValueError as exc:
        args.parser.error(str(exc))
    except OSError as exc:
        print(f"qhdtop: I/O error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
