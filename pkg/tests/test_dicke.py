import numpy as np
import pytest
from conftest import random_symmetric_state

from qhdtop import oracle
from qhdtop.dicke import (
    coherent_state,
    dicke_state,
    linear_entropy,
    reduce_symmetric_density,
    reduced_m_qubit,
    reduced_single_qubit,
    state_norm_error,
)


def test_coherent_state_polar_is_ground_state():
    amps = coherent_state(5, 0.0, 1.234)
    np.testing.assert_array_equal(amps, [1, 0, 0, 0, 0, 0])


def test_coherent_state_two_qubit_expansion():
    # ((|0> + |1>)/sqrt2)^{x2} has amplitudes (1/2, 1/sqrt2, 1/2)
    amps = coherent_state(2, np.pi / 4, 0.0)
    np.testing.assert_allclose(amps, [0.5, 1 / np.sqrt(2), 0.5], atol=1e-15)


def test_coherent_state_matches_kronecker_product():
    theta, phi = 0.9, 2.3
    spinor = np.array([np.cos(theta), np.exp(1j * phi) * np.sin(theta)])
    full = oracle.product_state(spinor, 6)
    np.testing.assert_allclose(oracle.dicke_to_full(coherent_state(6, theta, phi)), full, atol=1e-14)


@pytest.mark.parametrize("n", [17, 1000, 10_000])
def test_coherent_state_normalised_at_scale(n):
    rng = np.random.default_rng(n)
    for _ in range(5):
        amps = coherent_state(n, rng.uniform(0, np.pi), rng.uniform(0, 2 * np.pi))
        assert state_norm_error(amps) < 1e-12


def test_coherent_state_equator_is_top_state():
    amps = coherent_state(7, np.pi / 2, 0.3)
    assert abs(abs(amps[-1]) - 1.0) < 1e-12
    assert np.all(np.abs(amps[:-1]) < 1e-12)


def test_coherent_state_rejects_zero_qubits():
    with pytest.raises(ValueError):
        coherent_state(0, 0.1, 0.2)


@pytest.mark.parametrize("n,k", [(6, 3), (8, 0), (8, 8), (5, 2)])
def test_dicke_reduction_matches_partial_trace(n, k):
    rho = reduced_single_qubit(dicke_state(n, k))
    np.testing.assert_allclose(rho, np.diag([(n - k) / n, k / n]), atol=1e-12)
    ref = oracle.partial_trace(oracle.dicke_to_full(dicke_state(n, k)), [0])
    np.testing.assert_allclose(rho, ref, atol=1e-12)


def test_equal_superposition_single_qubit_is_mixed():
    # a_0 = a_4 = 1/sqrt2: cross terms vanish because amplitudes 1..3 are zero
    amps = (dicke_state(4, 0) + dicke_state(4, 4)) / np.sqrt(2)
    rho = reduced_single_qubit(amps)
    ref = oracle.partial_trace(oracle.dicke_to_full(amps), [2])
    np.testing.assert_allclose(rho, np.eye(2) / 2, atol=1e-12)
    np.testing.assert_allclose(rho, ref, atol=1e-12)


def test_coherent_reduction_is_the_spinor_projector():
    theta, phi = 0.7, 1.9
    rho = reduced_single_qubit(coherent_state(400, theta, phi))
    spinor = np.array([np.cos(theta), np.exp(1j * phi) * np.sin(theta)])
    np.testing.assert_allclose(rho, np.outer(spinor, spinor.conj()), atol=1e-12)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_coherent_m_qubit_reduction_stays_pure(m):
    rho = reduced_m_qubit(coherent_state(900, 1.1, 0.4), m)
    assert abs(np.trace(rho @ rho).real - 1.0) < 1e-10


def test_reduced_m_qubit_against_full_partial_trace():
    rng = np.random.default_rng(3)
    for n in (4, 6, 8):
        amps = random_symmetric_state(rng, n)
        psi = oracle.dicke_to_full(amps)
        for m in range(1, 4):
            sym = reduced_m_qubit(amps, m)
            # permutation invariance: any kept subset gives the same reduction
            for keep in (list(range(m)), list(range(n - m, n))):
                ref = oracle.partial_trace(psi, keep)
                emb = np.zeros((1 << m, m + 1))
                pc = np.array([b.bit_count() for b in range(1 << m)])
                from qhdtop.dicke import ln_binomial

                emb[np.arange(1 << m), pc] = np.exp(-0.5 * ln_binomial(m, pc))
                np.testing.assert_allclose(emb @ sym @ emb.T, ref, atol=1e-10)


def test_reduction_invariants_random_states():
    rng = np.random.default_rng(11)
    for n in (5, 23, 200):
        amps = random_symmetric_state(rng, n)
        for m in (1, 2, min(5, n)):
            rho = reduced_m_qubit(amps, m)
            assert np.max(np.abs(rho - rho.conj().T)) < 1e-12
            assert abs(np.trace(rho).real - 1.0) < 1e-10
            assert np.linalg.eigvalsh(rho)[0] > -1e-10


def test_single_qubit_closed_form_matches_general_path():
    rng = np.random.default_rng(7)
    for n in (2, 17, 64):
        amps = random_symmetric_state(rng, n)
        np.testing.assert_allclose(
            reduced_single_qubit(amps), reduced_m_qubit(amps, 1), atol=1e-12
        )


def test_reduction_rejects_bad_part_sizes():
    amps = coherent_state(4, 0.3, 0.0)
    with pytest.raises(ValueError):
        reduced_m_qubit(amps, 5)
    with pytest.raises(ValueError):
        reduced_m_qubit(amps, 0)


def test_nested_reduction_consistency():
    # reducing the m-qubit reduction to one qubit equals reducing directly
    rng = np.random.default_rng(19)
    for n in (6, 12):
        amps = random_symmetric_state(rng, n)
        direct = reduced_single_qubit(amps)
        for m in (2, 4, n - 1):
            nested = reduce_symmetric_density(reduced_m_qubit(amps, m), 1)
            np.testing.assert_allclose(nested, direct, atol=1e-10)


def test_reduce_symmetric_density_pure_agrees_with_amplitude_path():
    rng = np.random.default_rng(23)
    amps = random_symmetric_state(rng, 9)
    rho = np.outer(amps, amps.conj())
    for m in (1, 3, 9):
        np.testing.assert_allclose(
            reduce_symmetric_density(rho, m), reduced_m_qubit(amps, m), atol=1e-12
        )


def test_linear_entropy_values():
    assert linear_entropy(np.diag([1.0, 0.0])) == 0.0
    assert abs(linear_entropy(np.eye(2) / 2) - 0.5) < 1e-15
    assert abs(linear_entropy(np.diag([0.75, 0.25])) - 0.375) < 1e-15
