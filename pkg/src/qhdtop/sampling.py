"""Seeded sampling of initial conditions and the single-qubit perturbation.

Angles flow through the pipeline as Bloch angles: theta is the polar angle of
the spin direction (cos theta uniform on [-1, 1] for a uniform sphere) and phi
its azimuth. The corresponding qubit spinor uses the half angle,
|chi> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>, so that the Bloch vector
of |chi> is exactly quantum_to_classical(theta, phi).
"""

from dataclasses import dataclass

import numpy as np

from .classical import perpendicular_frame, quantum_to_classical

__all__ = [
    "PerturbationSpec",
    "EnsembleConfig",
    "derive_run_seed",
    "run_rng",
    "sample_initial",
    "sample_axis",
    "qubit_from_bloch",
    "bloch_angles_of_qubit",
    "perturb",
]

_PAULI = np.array(
    [
        [[0.0, 1.0], [1.0, 0.0]],
        [[0.0, -1.0j], [1.0j, 0.0]],
        [[1.0, 0.0], [0.0, -1.0]],
    ],
    dtype=complex,
)

AXIS_MODES = ("perp", "sphere")


@dataclass(frozen=True)
class PerturbationSpec:
    """A single-qubit rotation exp(i angle/2 * m.sigma) about unit axis m."""

    axis: np.ndarray
    angle: float

    def __post_init__(self):
        axis = np.asarray(self.axis, dtype=float)
        if axis.shape != (3,):
            raise ValueError("axis must be a 3-vector")
        if abs(np.linalg.norm(axis) - 1.0) > 1e-12:
            raise ValueError("axis must be a unit vector (within 1e-12)")
        object.__setattr__(self, "axis", axis)


@dataclass(frozen=True)
class EnsembleConfig:
    """Seeded ensemble: `runs` independent initial states, each perturbed by `angle`."""

    master_seed: int
    runs: int = 100
    angle: float = 0.01
    axis_mode: str = "perp"

    def __post_init__(self):
        if self.runs < 1:
            raise ValueError(f"runs must be >= 1, got {self.runs}")
        if self.axis_mode not in AXIS_MODES:
            raise ValueError(f"axis_mode must be one of {AXIS_MODES}, got {self.axis_mode!r}")


def derive_run_seed(master_seed, run_index):
    """Collision-resistant per-run seed stream, independent of execution order."""
    return np.random.SeedSequence(master_seed, spawn_key=(run_index,))


def run_rng(master_seed, run_index):
    """Generator for one run of an ensemble."""
    return np.random.default_rng(derive_run_seed(master_seed, run_index))


def sample_initial(rng):
    """Bloch angles (theta, phi) of a direction uniform on the sphere."""
    z = rng.uniform(-1.0, 1.0)
    phi = rng.uniform(0.0, 2.0 * np.pi)
    return float(np.arccos(z)), float(phi)


def sample_axis(rng, mode, theta, phi):
    """Perturbation axis: uniform in the plane perpendicular to the Bloch
    direction (`perp`, the default that makes the initial distance state
    independent) or uniform on the whole sphere (`sphere`)."""
    if mode == "perp":
        e1, e2 = perpendicular_frame(quantum_to_classical(theta, phi))
        psi = rng.uniform(0.0, 2.0 * np.pi)
        return np.cos(psi) * e1 + np.sin(psi) * e2
    if mode == "sphere":
        z = rng.uniform(-1.0, 1.0)
        az = rng.uniform(0.0, 2.0 * np.pi)
        s = np.sqrt(max(1.0 - z * z, 0.0))
        return np.array([s * np.cos(az), s * np.sin(az), z])
    raise ValueError(f"axis_mode must be one of {AXIS_MODES}, got {mode!r}")


def qubit_from_bloch(theta, phi):
    """Spinor (cos(theta/2), e^{i phi} sin(theta/2)) for Bloch angles (theta, phi)."""
    return np.array([np.cos(theta / 2.0), np.exp(1j * phi) * np.sin(theta / 2.0)])


def bloch_angles_of_qubit(spinor):
    """Bloch angles of a normalised qubit spinor (global phase dropped)."""
    u, v = spinor
    z = (abs(u) ** 2 - abs(v) ** 2) / (abs(u) ** 2 + abs(v) ** 2)
    w = 2.0 * np.conj(u) * v  # x + i y
    theta = float(np.arccos(np.clip(z, -1.0, 1.0)))
    phi = float(np.arctan2(w.imag, w.real)) % (2.0 * np.pi)
    return theta, phi


def rotation_matrix(spec):
    """The 2x2 rotation exp(i angle/2 * m.sigma) = cos(angle/2) I + i sin(angle/2) m.sigma."""
    m_sigma = np.tensordot(spec.axis, _PAULI, axes=1)
    half = spec.angle / 2.0
    return np.cos(half) * np.eye(2, dtype=complex) + 1j * np.sin(half) * m_sigma


def perturb(theta, phi, spec):
    """Bloch angles of R|chi> for the rotation R defined by `spec`.

    The sign convention follows the exponential exp(i angle/2 m.sigma) as
    written: the Bloch vector rotates by -angle about m (right-hand rule).
    """
    chi = rotation_matrix(spec) @ qubit_from_bloch(theta, phi)
    return bloch_angles_of_qubit(chi)
