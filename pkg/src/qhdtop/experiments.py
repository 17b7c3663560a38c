"""Reproducible experiment pipelines: averaged distance/entropy curves,
Ehrenfest-time scaling fits, and the quantum/classical transition comparison.

Determinism contract: every result is a pure function of (config, ensemble
seed). Runs are grouped into fixed-size batches independent of the worker
count, each batch is evolved with BLAS pinned to a single thread, and per-run
outputs are stored by run index before the fixed-order numpy reduction — so
`threads=1` and `threads=8` produce bit-identical numbers.
"""

import math
import os
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from threadpoolctl import threadpool_limits

from .classical import classify_initial_condition, iterate, phi_z, quantum_to_classical
from .dicke import coherent_state
from .floquet import KickedTopConfig, build_cache, step
from .sampling import (
    EnsembleConfig,
    PerturbationSpec,
    perturb,
    run_rng,
    sample_axis,
    sample_initial,
)

__all__ = [
    "DistanceCurve",
    "EhrenfestPoint",
    "ModelFit",
    "EhrenfestScan",
    "TransitionRecord",
    "default_threads",
    "averaged_distance_curve",
    "entropy_curve",
    "ehrenfest_scan",
    "transition_compare",
    "find_transition_pair",
]

_BATCH_RUNS = 25  # fixed batch size; must not depend on the worker count


def default_threads():
    """Worker count: QHD_THREADS env var if set, else the CPU count."""
    env = os.environ.get("QHD_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


@dataclass(frozen=True)
class DistanceCurve:
    """Ensemble-averaged distance and entropy curves.

    d_mean[t] is the mean quantum Hamming distance between the original and
    perturbed trajectories (all-singletons partition), s_mean[t] the mean
    linear entropy of the unperturbed single-qubit reduction, overlap_drift
    the largest |overlap(t) - overlap(0)| seen on any run.
    """

    t: np.ndarray
    d_mean: np.ndarray
    d_sem: np.ndarray
    s_mean: np.ndarray
    runs: int
    overlap_drift: float
    config: KickedTopConfig
    ensemble: EnsembleConfig
    d_runs: np.ndarray | None = None  # (steps+1, runs) when requested


def _single_qubit_batch(a):
    # vectorised reduced_single_qubit over the columns of a: (n+1, R)
    n = a.shape[0] - 1
    l = np.arange(n)
    p = np.abs(a) ** 2
    r00 = np.einsum("lr,l->r", p[:n], (n - l) / n)
    r11 = np.einsum("lr,l->r", p[1:], (l + 1) / n)
    r01 = np.einsum("lr,lr->r", a[:n] * (np.sqrt((n - l) * (l + 1.0)) / n)[:, None], np.conj(a[1:]))
    return r00.real, r01, r11.real


def _pair_metrics(a, b):
    # per-column QHD (n * trace distance of single-qubit reductions),
    # linear entropy of a, and |<a|b>|
    n = a.shape[0] - 1
    a00, a01, a11 = _single_qubit_batch(a)
    b00, b01, b11 = _single_qubit_batch(b)
    d00 = a00 - b00
    d11 = a11 - b11
    d01 = a01 - b01
    tr = d00 + d11
    det = d00 * d11 - np.abs(d01) ** 2
    disc = np.sqrt(np.maximum(tr * tr - 4.0 * det, 0.0))
    dist = 0.25 * (np.abs(tr + disc) + np.abs(tr - disc))
    entropy = 1.0 - (a00**2 + a11**2 + 2.0 * np.abs(a01) ** 2)
    overlap = np.abs(np.einsum("lr,lr->r", np.conj(a), b))
    return n * dist, entropy, overlap


def _prepare_run(n, ensemble, run_index):
    rng = run_rng(ensemble.master_seed, run_index)
    theta, phi = sample_initial(rng)
    axis = sample_axis(rng, ensemble.axis_mode, theta, phi)
    theta_p, phi_p = perturb(theta, phi, PerturbationSpec(axis=axis, angle=ensemble.angle))
    return coherent_state(n, theta / 2.0, phi), coherent_state(n, theta_p / 2.0, phi_p)


def _run_batch(cache, ensemble, steps, run_indices):
    n = cache.n
    r = len(run_indices)
    a = np.empty((n + 1, r), dtype=complex)
    b = np.empty((n + 1, r), dtype=complex)
    for j, run in enumerate(run_indices):
        a[:, j], b[:, j] = _prepare_run(n, ensemble, run)
    d = np.empty((steps + 1, r))
    s = np.empty((steps + 1, r))
    ov = np.empty((steps + 1, r))
    d[0], s[0], ov[0] = _pair_metrics(a, b)
    for t in range(1, steps + 1):
        a = step(a, cache)
        b = step(b, cache)
        a /= np.linalg.norm(a, axis=0)
        b /= np.linalg.norm(b, axis=0)
        d[t], s[t], ov[t] = _pair_metrics(a, b)
    return d, s, ov


def _ensemble_curves(config, ensemble, steps, threads=None):
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    cache = build_cache(config)  # built before BLAS is pinned
    batches = [
        range(lo, min(lo + _BATCH_RUNS, ensemble.runs))
        for lo in range(0, ensemble.runs, _BATCH_RUNS)
    ]
    results = [None] * len(batches)
    workers = threads if threads is not None else default_threads()
    with threadpool_limits(limits=1):
        if workers > 1 and len(batches) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                for i, res in enumerate(
                    pool.map(lambda idx: _run_batch(cache, ensemble, steps, idx), batches)
                ):
                    results[i] = res
        else:
            for i, idx in enumerate(batches):
                results[i] = _run_batch(cache, ensemble, steps, idx)
    d = np.concatenate([r[0] for r in results], axis=1)
    s = np.concatenate([r[1] for r in results], axis=1)
    ov = np.concatenate([r[2] for r in results], axis=1)
    return d, s, ov


def averaged_distance_curve(config, ensemble, steps, threads=None, keep_runs=False):
    """Ensemble-averaged distance curve D_t with per-step standard errors.

    With keep_runs=True the per-run distance samples are attached as d_runs.
    """
    d, s, ov = _ensemble_curves(config, ensemble, steps, threads=threads)
    runs = ensemble.runs
    sem = d.std(axis=1, ddof=1) / math.sqrt(runs) if runs > 1 else np.zeros(d.shape[0])
    drift = float(np.max(np.abs(ov - ov[0]))) if steps >= 1 else 0.0
    return DistanceCurve(
        t=np.arange(steps + 1),
        d_mean=d.mean(axis=1),
        d_sem=sem,
        s_mean=s.mean(axis=1),
        runs=runs,
        overlap_drift=drift,
        config=config,
        ensemble=ensemble,
        d_runs=d if keep_runs else None,
    )


def entropy_curve(config, ensemble, steps, threads=None):
    """Mean single-qubit linear entropy S_t on the unperturbed trajectories."""
    _, s, _ = _ensemble_curves(config, ensemble, steps, threads=threads)
    return s.mean(axis=1)


@dataclass(frozen=True)
class EhrenfestPoint:
    n: int
    peak_time: float
    peak_height: float
    at_window_edge: bool
    overlap_drift: float


@dataclass(frozen=True)
class ModelFit:
    model: str  # "log" or "sqrt"
    slope: float
    intercept: float
    r_squared: float


@dataclass(frozen=True)
class EhrenfestScan:
    alpha: float
    points: tuple
    fit_log: ModelFit
    fit_sqrt: ModelFit

    @property
    def preferred_model(self):
        return "log" if self.fit_log.r_squared > self.fit_sqrt.r_squared else "sqrt"


CHAOTIC_ALPHA_THRESHOLD = 3.0


def default_window(alpha, n):
    """Scan window: 50 steps in the chaotic regime, 4 sqrt(n) in the regular one."""
    if alpha >= CHAOTIC_ALPHA_THRESHOLD:
        return 50
    return max(50, math.ceil(4.0 * math.sqrt(n)))


def _refine_peak(curve):
    i = int(np.argmax(curve))
    edge = i == 0 or i == curve.size - 1
    if edge:
        warnings.warn(
            f"distance peak at scan-window edge (t={i} of {curve.size - 1}); widen the window",
            stacklevel=3,
        )
        return float(i), float(curve[i]), True
    y0, y1, y2 = curve[i - 1], curve[i], curve[i + 1]
    denom = y0 - 2.0 * y1 + y2
    shift = 0.0 if denom == 0.0 else 0.5 * (y0 - y2) / denom
    return float(i + shift), float(y1), False


def _fit(x, y, model):
    slope, intercept = np.polyfit(x, y, 1)
    pred = slope * x + intercept
    ss_res = float(np.sum((y - pred) ** 2))
    ss_tot = float(np.sum((y - np.mean(y)) ** 2))
    r2 = 1.0 - ss_res / ss_tot if ss_tot > 0.0 else 0.0
    return ModelFit(model=model, slope=float(slope), intercept=float(intercept), r_squared=r2)


def ehrenfest_scan(alpha, n_list, ensemble, steps=None, beta=np.pi / 2, threads=None):
    """Peak times of D_t across system sizes, fitted against ln(n) and sqrt(n).

    The peak is the discrete argmax refined by a 3-point parabola; a peak on
    the window edge is flagged and warned about. Both fits include an
    intercept. At least two system sizes are required.
    """
    n_list = list(n_list)
    if len(n_list) < 2:
        raise ValueError("need at least two system sizes to fit a scaling model")
    if any(n < 2 for n in n_list):
        raise ValueError("system sizes must be >= 2")
    points = []
    for n in n_list:
        window = default_window(alpha, n) if steps is None else steps
        curve = averaged_distance_curve(
            KickedTopConfig(n=n, alpha=alpha, beta=beta), ensemble, window, threads=threads
        )
        peak_time, peak_height, edge = _refine_peak(curve.d_mean)
        points.append(
            EhrenfestPoint(
                n=n,
                peak_time=peak_time,
                peak_height=peak_height,
                at_window_edge=edge,
                overlap_drift=curve.overlap_drift,
            )
        )
    ns = np.array([p.n for p in points], dtype=float)
    te = np.array([p.peak_time for p in points])
    return EhrenfestScan(
        alpha=alpha,
        points=tuple(points),
        fit_log=_fit(np.log(ns), te, "log"),
        fit_sqrt=_fit(np.sqrt(ns), te, "sqrt"),
    )


@dataclass(frozen=True)
class TransitionRecord:
    """One non-averaged quantum pair plus the matching classical trajectory."""

    theta: float
    phi: float
    distance: np.ndarray
    overlap_drift: float
    classical_xyz: np.ndarray
    classical_phi_z: np.ndarray
    probe: object
    config: KickedTopConfig
    perturbation: PerturbationSpec


def transition_compare(config, theta, phi, perturbation, steps, classical_steps=None):
    """Single-run distance series D(rho_t, rho'_t) from one initial condition,
    with the classical trajectory from the same Bloch direction and its
    divergence-probe classification attached.

    The classical side runs on the shadow (z-reflection conjugate) map so the
    trajectory and classification describe the same phase-space motion as the
    quantum run; see classical.shadow_step.
    """
    theta_p, phi_p = perturb(theta, phi, perturbation)
    a = coherent_state(config.n, theta / 2.0, phi)[:, None]
    b = coherent_state(config.n, theta_p / 2.0, phi_p)[:, None]
    cache = build_cache(config)
    d = np.empty(steps + 1)
    ov = np.empty(steps + 1)
    d[0:1], _, ov[0:1] = _pair_metrics(a, b)
    for t in range(1, steps + 1):
        a = step(a, cache)
        b = step(b, cache)
        a /= np.linalg.norm(a, axis=0)
        b /= np.linalg.norm(b, axis=0)
        dt, _, ot = _pair_metrics(a, b)
        d[t] = dt[0]
        ov[t] = ot[0]
    r0 = quantum_to_classical(theta, phi)
    xyz = iterate(
        r0, config.alpha, classical_steps if classical_steps is not None else steps, shadow=True
    )
    return TransitionRecord(
        theta=theta,
        phi=phi,
        distance=d,
        overlap_drift=float(np.max(np.abs(ov - ov[0]))),
        classical_xyz=xyz,
        classical_phi_z=phi_z(xyz),
        probe=classify_initial_condition(r0, config.alpha, shadow=True),
        config=config,
        perturbation=perturbation,
    )


def find_transition_pair(alpha, theta_count=13, phi_count=16, island_width=0.09):
    """Scan a fixed Bloch-angle grid with the classical divergence probe and
    return ((theta, phi) regular, (theta, phi) chaotic).

    The probe runs on the shadow map so the labels predict the quantum
    behaviour at those angles. The chaotic pick is the earliest threshold
    crossing (strongest stretching). Among regular points a second probe with
    a macroscopic displacement of `island_width` radians (about the angular
    width of a coherent state for n of a few hundred) scores how fat the
    surrounding island is; the smallest spread wins, which keeps the finite
    width quantum state inside the island.
    """
    thetas = np.linspace(0.05 * np.pi, 0.95 * np.pi, theta_count)
    phis = np.linspace(0.0, 2.0 * np.pi, phi_count, endpoint=False)
    best_regular = None
    best_chaotic = None
    for theta in thetas:
        for phi in phis:
            r0 = quantum_to_classical(theta, phi)
            probe = classify_initial_condition(r0, alpha, shadow=True)
            if probe.chaotic:
                key = (probe.crossing_step, -probe.max_separation)
                if best_chaotic is None or key < best_chaotic[0]:
                    best_chaotic = (key, (float(theta), float(phi)))
            else:
                spread = classify_initial_condition(
                    r0, alpha, steps=100, displacement=island_width, threshold=np.inf, shadow=True
                ).max_separation
                if best_regular is None or spread < best_regular[0]:
                    best_regular = (spread, (float(theta), float(phi)))
    if best_regular is None or best_chaotic is None:
        raise RuntimeError(f"grid scan at alpha={alpha} did not find both behaviours")
    return best_regular[1], best_chaotic[1]
