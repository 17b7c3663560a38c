"""Classical kicked-top map on the unit sphere, plus Bloch-sphere geometry helpers.

One kick-and-precess period maps the unit spin vector r = (x, y, z) through

    x' =  sin(alpha x) y + cos(alpha x) z
    y' =  cos(alpha x) y - sin(alpha x) z
    z' = -x

The matrix rows are orthonormal, so the map is norm preserving up to roundoff.
"""

from dataclasses import dataclass

import numpy as np

__all__ = [
    "quantum_to_classical",
    "perpendicular_frame",
    "classical_step",
    "shadow_step",
    "iterate",
    "trajectory",
    "phi_z",
    "ChaosProbe",
    "classify_initial_condition",
]


def quantum_to_classical(theta, phi):
    """Bloch direction (cos phi sin theta, sin phi sin theta, cos theta) as a classical spin."""
    st = np.sin(theta)
    return np.array([np.cos(phi) * st, np.sin(phi) * st, np.cos(theta)])


def perpendicular_frame(v):
    """Deterministic orthonormal pair (e1, e2) spanning the plane perpendicular to unit v."""
    v = np.asarray(v, dtype=float)
    helper = np.zeros(3)
    helper[np.argmin(np.abs(v))] = 1.0
    e1 = np.cross(helper, v)
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(v, e1)
    return e1, e2


def classical_step(r, alpha):
    """One period of the classical kicked top; renormalises only if drift exceeds 1e-12."""
    x, y, z = r
    s = np.sin(alpha * x)
    c = np.cos(alpha * x)
    out = np.array([s * y + c * z, c * y - s * z, -x])
    norm = np.linalg.norm(out)
    if abs(norm - 1.0) > 1e-12:
        out /= norm
    return out


_Z_FLIP = np.array([1.0, 1.0, -1.0])


def shadow_step(r, alpha):
    """The z-reflection conjugate of classical_step.

    The published map and the quantum propagator implemented here differ by a
    reflection through the equatorial plane: the single-qubit Bloch vector of
    an evolved coherent state follows this conjugated map, not the published
    one (checked against large-n quantum evolution). Use it wherever a
    trajectory must correspond to a concrete quantum run.
    """
    return classical_step(np.asarray(r, dtype=float) * _Z_FLIP, alpha) * _Z_FLIP


def iterate(r0, alpha, t, shadow=False):
    """Iterated map as an array of unit vectors, shape (t+1, 3)."""
    if t < 0:
        raise ValueError(f"step count must be >= 0, got {t}")
    advance = shadow_step if shadow else classical_step
    out = np.empty((t + 1, 3))
    out[0] = np.asarray(r0, dtype=float)
    for i in range(t):
        out[i + 1] = advance(out[i], alpha)
    return out


def phi_z(points):
    """(phi, z) coordinates with phi = arg(x+iy) wrapped to (-pi, pi]; phi := 0 at the poles."""
    points = np.atleast_2d(points)
    phi = np.arctan2(points[:, 1], points[:, 0])
    phi[phi <= -np.pi] = np.pi
    at_pole = (points[:, 0] == 0.0) & (points[:, 1] == 0.0)
    phi[at_pole] = 0.0
    return np.column_stack([phi, points[:, 2]])


def trajectory(r0, alpha, t, shadow=False):
    """Trajectory in (phi, z) coordinates, shape (t+1, 2)."""
    return phi_z(iterate(r0, alpha, t, shadow=shadow))


def _separation_angle(a, b):
    cross = np.linalg.norm(np.cross(a, b))
    dot = float(np.dot(a, b))
    return float(np.arctan2(cross, dot))


@dataclass(frozen=True)
class ChaosProbe:
    """Two-point divergence result: `chaotic` if the angular separation of a
    trajectory and a copy displaced by `displacement` exceeds `threshold`
    within `steps` iterations."""

    chaotic: bool
    max_separation: float
    crossing_step: int | None
    steps: int
    displacement: float
    threshold: float

    @property
    def label(self):
        return "chaotic" if self.chaotic else "regular"


def classify_initial_condition(r0, alpha, steps=200, displacement=1e-8, threshold=1e-2, shadow=False):
    """Finite-difference divergence probe for one initial condition.

    The companion point is r0 rotated by `displacement` radians within the
    tangent plane (exact angular offset), so regular orbits keep the pair at
    O(displacement * t) while chaotic ones amplify it exponentially. With
    shadow=True the probe runs on the quantum-corresponding conjugate map.
    """
    advance = shadow_step if shadow else classical_step
    r = np.asarray(r0, dtype=float)
    _, e2 = perpendicular_frame(r)
    r_shift = np.cos(displacement) * r + np.sin(displacement) * e2
    max_sep = 0.0
    crossing = None
    for t in range(1, steps + 1):
        r = advance(r, alpha)
        r_shift = advance(r_shift, alpha)
        sep = _separation_angle(r, r_shift)
        if sep > max_sep:
            max_sep = sep
        if crossing is None and sep > threshold:
            crossing = t
            break
    return ChaosProbe(
        chaotic=crossing is not None,
        max_separation=max_sep,
        crossing_step=crossing,
        steps=steps,
        displacement=displacement,
        threshold=threshold,
    )
