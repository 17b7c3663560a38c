import numpy as np
import pytest

from qhdtop.experiments import (
    EnsembleConfig,
    KickedTopConfig,
    averaged_distance_curve,
    default_window,
    ehrenfest_scan,
    entropy_curve,
    find_transition_pair,
    transition_compare,
)
from qhdtop.sampling import PerturbationSpec, run_rng, sample_axis
from qhdtop.validate import validation_battery


def test_initial_row_is_exact_and_deterministic():
    ens = EnsembleConfig(master_seed=3, runs=12, angle=0.02)
    curve = averaged_distance_curve(KickedTopConfig(n=64, alpha=2.0), ens, 5)
    assert abs(curve.d_mean[0] - 64 * np.sin(0.01)) < 1e-10
    assert curve.d_sem[0] < 1e-12  # perpendicular mode: zero variance at t=0
    assert curve.runs == 12
    assert np.all(curve.d_mean >= 0)
    assert np.all((curve.s_mean >= -1e-12) & (curve.s_mean <= 0.5 + 1e-12))


def test_zero_perturbation_gives_zero_distance():
    ens = EnsembleConfig(master_seed=4, runs=6, angle=0.0)
    curve = averaged_distance_curve(KickedTopConfig(n=32, alpha=3.0), ens, 8)
    assert np.max(curve.d_mean) < 1e-12


def test_zero_kick_keeps_entropy_zero():
    ens = EnsembleConfig(master_seed=5, runs=6, angle=0.01)
    s = entropy_curve(KickedTopConfig(n=32, alpha=0.0), ens, 10)
    assert s[0] < 1e-13
    assert np.max(s) < 1e-10


def test_entropy_curve_matches_distance_curve_channel():
    ens = EnsembleConfig(master_seed=6, runs=5, angle=0.01)
    cfg = KickedTopConfig(n=24, alpha=4.0)
    curve = averaged_distance_curve(cfg, ens, 6)
    s = entropy_curve(cfg, ens, 6)
    np.testing.assert_array_equal(curve.s_mean, s)


def test_worker_count_does_not_change_bits():
    ens = EnsembleConfig(master_seed=9, runs=60, angle=0.01)
    cfg = KickedTopConfig(n=48, alpha=5.0)
    one = averaged_distance_curve(cfg, ens, 12, threads=1)
    many = averaged_distance_curve(cfg, ens, 12, threads=8)
    np.testing.assert_array_equal(one.d_mean, many.d_mean)
    np.testing.assert_array_equal(one.d_sem, many.d_sem)
    np.testing.assert_array_equal(one.s_mean, many.s_mean)
    assert one.overlap_drift == many.overlap_drift


def test_master_seed_controls_the_ensemble():
    cfg = KickedTopConfig(n=20, alpha=3.0)
    a = averaged_distance_curve(cfg, EnsembleConfig(master_seed=1, runs=4), 5)
    b = averaged_distance_curve(cfg, EnsembleConfig(master_seed=1, runs=4), 5)
    c = averaged_distance_curve(cfg, EnsembleConfig(master_seed=2, runs=4), 5)
    np.testing.assert_array_equal(a.d_mean, b.d_mean)
    assert np.any(a.d_mean != c.d_mean)


def test_overlap_constant_while_distance_moves():
    ens = EnsembleConfig(master_seed=12, runs=10, angle=0.01)
    curve = averaged_distance_curve(KickedTopConfig(n=128, alpha=6.0), ens, 25)
    assert curve.overlap_drift <= 1e-10
    assert curve.d_mean.max() > 2 * curve.d_mean[0]


def test_steps_validation():
    ens = EnsembleConfig(master_seed=0, runs=2)
    with pytest.raises(ValueError):
        averaged_distance_curve(KickedTopConfig(n=8, alpha=1.0), ens, 0)


def test_default_window_rule():
    assert default_window(6.0, 1024) == 50
    assert default_window(1.0, 1024) == 128
    assert default_window(1.0, 64) == 50  # floor of 50 steps


def test_ehrenfest_needs_two_sizes():
    ens = EnsembleConfig(master_seed=0, runs=3)
    with pytest.raises(ValueError):
        ehrenfest_scan(6.0, [128], ens)
    with pytest.raises(ValueError):
        ehrenfest_scan(6.0, [1, 64], ens)


def test_ehrenfest_scan_smoke():
    ens = EnsembleConfig(master_seed=21, runs=8, angle=0.01)
    scan = ehrenfest_scan(6.0, [48, 96, 192], ens, steps=30)
    assert len(scan.points) == 3
    for p in scan.points:
        assert 0 <= p.peak_time <= 30
        assert not p.at_window_edge
    for fit in (scan.fit_log, scan.fit_sqrt):
        assert 0.0 <= fit.r_squared <= 1.0
    assert scan.preferred_model in ("log", "sqrt")


def test_peak_on_window_edge_warns():
    ens = EnsembleConfig(master_seed=22, runs=4, angle=0.01)
    with pytest.warns(UserWarning, match="window edge"):
        ehrenfest_scan(1.0, [64, 128], ens, steps=3)


def test_transition_zero_perturbation_is_flat():
    cfg = KickedTopConfig(n=48, alpha=2.3)
    spec = PerturbationSpec(axis=np.array([1.0, 0.0, 0.0]), angle=0.0)
    rec = transition_compare(cfg, 1.0, 0.5, spec, 20)
    assert np.max(rec.distance) < 1e-12
    assert rec.probe.label in ("chaotic", "regular")


def test_transition_record_structure():
    cfg = KickedTopConfig(n=40, alpha=2.3)
    axis = sample_axis(run_rng(0, 0), "perp", 1.0, 0.5)
    rec = transition_compare(cfg, 1.0, 0.5, PerturbationSpec(axis=axis, angle=0.01), 15, classical_steps=40)
    assert rec.distance.shape == (16,)
    assert rec.classical_xyz.shape == (41, 3)
    assert rec.classical_phi_z.shape == (41, 2)
    norms = np.linalg.norm(rec.classical_xyz, axis=1)
    assert np.max(np.abs(norms - 1)) < 1e-10
    assert rec.overlap_drift <= 1e-10


def test_find_transition_pair_labels_are_consistent():
    from qhdtop.classical import classify_initial_condition, quantum_to_classical

    regular, chaotic = find_transition_pair(2.3)
    assert not classify_initial_condition(
        quantum_to_classical(*regular), 2.3, shadow=True
    ).chaotic
    assert classify_initial_condition(quantum_to_classical(*chaotic), 2.3, shadow=True).chaotic


def test_validation_battery_passes_and_detects_corruption():
    good = validation_battery(5, seed=3, draws=2, steps=12)
    assert all(c.passed for c in good)
    bad = validation_battery(5, seed=3, draws=2, steps=12, corrupt_kick=True)
    assert any(not c.passed for c in bad)
