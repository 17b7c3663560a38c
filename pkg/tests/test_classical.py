import numpy as np
import pytest

from qhdtop.classical import (
    classical_step,
    classify_initial_condition,
    iterate,
    perpendicular_frame,
    phi_z,
    quantum_to_classical,
    shadow_step,
    trajectory,
)
from qhdtop.dicke import coherent_state, reduced_single_qubit
from qhdtop.floquet import KickedTopConfig, build_cache, step
from qhdtop.sampling import PerturbationSpec, perturb, sample_axis, run_rng


def test_pole_maps_to_x_axis():
    np.testing.assert_allclose(classical_step(np.array([0.0, 0.0, 1.0]), 4.7), [1, 0, 0], atol=0)


@pytest.mark.parametrize("alpha", [1.0, 2.3, 6.0])
def test_polar_orbit_has_period_four(alpha):
    orbit = [np.array([0.0, 0.0, 1.0])]
    for _ in range(4):
        orbit.append(classical_step(orbit[-1], alpha))
    np.testing.assert_allclose(orbit[1], [1, 0, 0], atol=1e-12)
    np.testing.assert_allclose(orbit[2], [0, 0, -1], atol=1e-12)
    np.testing.assert_allclose(orbit[3], [-1, 0, 0], atol=1e-12)
    np.testing.assert_allclose(orbit[4], orbit[0], atol=1e-12)


def test_norm_preserved_over_long_runs():
    r = np.array([0.2, -0.7, np.sqrt(1 - 0.04 - 0.49)])
    for _ in range(100_000):
        r = classical_step(r, 6.0)
    assert abs(np.linalg.norm(r) - 1.0) < 1e-10


def test_zero_kick_reduces_to_quarter_turn():
    rng = np.random.default_rng(0)
    v = rng.normal(size=3)
    v /= np.linalg.norm(v)
    np.testing.assert_allclose(classical_step(v, 0.0), [v[2], v[1], -v[0]], atol=1e-15)


def test_trajectory_start_and_pole_convention():
    traj = trajectory(np.array([0.0, 0.0, 1.0]), 3.0, 0)
    assert traj.shape == (1, 2)
    assert traj[0, 0] == 0.0 and traj[0, 1] == 1.0
    # phi wrapped to (-pi, pi]
    pts = iterate(np.array([0.6, 0.3, np.sqrt(1 - 0.45)]), 2.3, 500)
    phis = phi_z(pts)[:, 0]
    assert phis.max() <= np.pi and phis.min() > -np.pi


def test_quantum_to_classical_directions():
    np.testing.assert_allclose(quantum_to_classical(0.0, 1.9), [0, 0, 1], atol=1e-15)
    np.testing.assert_allclose(quantum_to_classical(np.pi / 2, 0.0), [1, 0, 0], atol=1e-15)


def test_perturbation_subtends_the_rotation_angle():
    # classical images of the state and its perturbed partner are `angle` apart
    theta, phi, angle = 1.2, 0.8, 0.25
    axis = sample_axis(run_rng(3, 0), "perp", theta, phi)
    tp, pp = perturb(theta, phi, PerturbationSpec(axis=axis, angle=angle))
    a = quantum_to_classical(theta, phi)
    b = quantum_to_classical(tp, pp)
    assert abs(np.arccos(np.clip(np.dot(a, b), -1, 1)) - angle) < 1e-12


def test_perpendicular_frame_is_orthonormal():
    rng = np.random.default_rng(8)
    for _ in range(50):
        v = rng.normal(size=3)
        v /= np.linalg.norm(v)
        e1, e2 = perpendicular_frame(v)
        for pair in ((e1, e2), (e1, v), (e2, v)):
            assert abs(np.dot(*pair)) < 1e-12
        assert abs(np.linalg.norm(e1) - 1) < 1e-12 and abs(np.linalg.norm(e2) - 1) < 1e-12


def test_shadow_step_is_the_z_reflection_conjugate():
    rng = np.random.default_rng(12)
    flip = np.array([1.0, 1.0, -1.0])
    for _ in range(20):
        r = rng.normal(size=3)
        r /= np.linalg.norm(r)
        np.testing.assert_allclose(
            shadow_step(r, 2.3), classical_step(r * flip, 2.3) * flip, atol=1e-15
        )


def test_shadow_map_tracks_quantum_bloch_vector():
    # short-time correspondence at large n: the reduction's Bloch vector
    # follows the shadow map, not the published one
    n, alpha, steps = 2000, 2.0, 5
    theta, phi = 1.1, 0.7
    amps = coherent_state(n, theta / 2, phi)
    cache = build_cache(KickedTopConfig(n=n, alpha=alpha))
    r_shadow = quantum_to_classical(theta, phi)
    r_printed = quantum_to_classical(theta, phi)
    for _ in range(steps):
        amps = step(amps, cache)
        amps /= np.linalg.norm(amps)
        r_shadow = shadow_step(r_shadow, alpha)
        r_printed = classical_step(r_printed, alpha)
    rho = reduced_single_qubit(amps)
    bloch = np.array(
        [2 * rho[0, 1].real, -2 * rho[0, 1].imag, (rho[0, 0] - rho[1, 1]).real]
    )
    bloch /= np.linalg.norm(bloch)
    assert np.linalg.norm(bloch - r_shadow) < 0.01
    assert np.linalg.norm(bloch - r_printed) > 0.5


def test_classify_rotation_is_regular_and_strong_kick_is_chaotic():
    regular = classify_initial_condition(np.array([0.3, 0.5, np.sqrt(1 - 0.34)]), 0.0)
    assert not regular.chaotic
    chaotic = classify_initial_condition(quantum_to_classical(1.3, 2.0), 6.0, shadow=True)
    assert chaotic.chaotic and chaotic.crossing_step is not None
    assert chaotic.label == "chaotic" and regular.label == "regular"


def test_iterate_rejects_negative_steps():
    with pytest.raises(ValueError):
        iterate(np.array([0.0, 0.0, 1.0]), 1.0, -1)
