"""Exponential-cost reference implementations over the full 2^n Hilbert space.

These validate every fast path: Floquet evolution (n <= 12), symmetric
reductions against literal partial traces, and the quantum Hamming distance
against enumeration of all set partitions (n <= 8, Bell(8) = 4140).
Deliberately simple and deliberately slow.
"""

import numpy as np

from .dicke import ln_binomial
from .metrics import _BASE_METRICS

__all__ = [
    "MAX_EVOLVE_QUBITS",
    "MAX_PARTITION_QUBITS",
    "basis_index",
    "computational_state",
    "product_state",
    "dicke_to_full",
    "full_to_dicke",
    "full_floquet",
    "partial_trace",
    "set_partitions",
    "delta_for_partition",
    "qhd_exhaustive",
]

MAX_EVOLVE_QUBITS = 12
MAX_PARTITION_QUBITS = 8


def _popcounts(n):
    return np.array([b.bit_count() for b in range(1 << n)])


def basis_index(bits):
    """Index of the computational basis state |b_0 b_1 ... b_{n-1}>, qubit 0 first."""
    idx = 0
    for b in bits:
        idx = (idx << 1) | int(b)
    return idx


def computational_state(bits):
    """Full-space vector for a computational basis state given as a bit sequence."""
    bits = list(bits)
    psi = np.zeros(1 << len(bits), dtype=complex)
    psi[basis_index(bits)] = 1.0
    return psi


def product_state(spinor, n):
    """|spinor>^{tensor n} as a full-space vector."""
    psi = np.asarray(spinor, dtype=complex)
    out = psi
    for _ in range(n - 1):
        out = np.kron(out, psi)
    return out


def dicke_to_full(amps):
    """Embed Dicke amplitudes into the full 2^n computational basis."""
    amps = np.asarray(amps, dtype=complex)
    n = amps.size - 1
    pc = _popcounts(n)
    weights = np.exp(-0.5 * ln_binomial(n, pc))
    return amps[pc] * weights


def full_to_dicke(psi):
    """Project a full-space vector onto the Dicke span.

    Returns (amps, residual) where residual is the norm of the component
    outside the symmetric subspace.
    """
    psi = np.asarray(psi, dtype=complex)
    n = int(round(np.log2(psi.size)))
    pc = _popcounts(n)
    weights = np.exp(-0.5 * ln_binomial(n, pc))
    amps = np.zeros(n + 1, dtype=complex)
    np.add.at(amps, pc, psi * weights)
    residual = float(np.linalg.norm(psi - amps[pc] * weights))
    return amps, residual


def _apply_single_qubit_gate(psi, gate, i, n):
    left = 1 << i
    right = 1 << (n - 1 - i)
    cube = psi.reshape(left, 2, right)
    return np.einsum("ab,xby->xay", gate, cube).reshape(-1)


def full_floquet(psi, alpha, beta):
    """One kicked-top period on the full 2^n space: precession on every qubit,
    then the diagonal pairwise-sigma_z kick phase exp(i alpha (n - 2 popcount)^2 / 4n)."""
    psi = np.asarray(psi, dtype=complex)
    n = int(round(np.log2(psi.size)))
    if n > MAX_EVOLVE_QUBITS:
        raise ValueError(f"full-space evolution capped at {MAX_EVOLVE_QUBITS} qubits, got {n}")
    half = beta / 2.0
    gate = np.array(
        [[np.cos(half), np.sin(half)], [-np.sin(half), np.cos(half)]], dtype=complex
    )  # exp(i beta/2 sigma_y)
    out = psi
    for i in range(n):
        out = _apply_single_qubit_gate(out, gate, i, n)
    pc = _popcounts(n)
    phases = np.exp(1j * alpha * (n - 2.0 * pc) ** 2 / (4.0 * n))
    return phases * out


def partial_trace(psi, keep):
    """Reduced density matrix of the kept qubits (ascending index order)."""
    psi = np.asarray(psi, dtype=complex)
    n = int(round(np.log2(psi.size)))
    keep = sorted(keep)
    if any(i < 0 or i >= n for i in keep) or len(set(keep)) != len(keep):
        raise ValueError(f"invalid qubit subset {keep} for n={n}")
    if len(keep) > MAX_PARTITION_QUBITS:
        raise ValueError(f"partial trace capped at {MAX_PARTITION_QUBITS} kept qubits")
    rest = [i for i in range(n) if i not in keep]
    tensor = psi.reshape((2,) * n)
    mat = np.transpose(tensor, keep + rest).reshape(1 << len(keep), 1 << len(rest))
    return mat @ mat.conj().T


def set_partitions(n):
    """All set partitions of {0..n-1} as tuples of index tuples.

    Enumeration follows restricted-growth strings in lexicographic order, so
    the sequence is deterministic: first the single block {0..n-1}, last the
    all-singletons partition.
    """
    a = [0] * n
    while True:
        blocks = {}
        for i, label in enumerate(a):
            blocks.setdefault(label, []).append(i)
        yield tuple(tuple(blocks[label]) for label in sorted(blocks))
        # next restricted-growth string
        for i in range(n - 1, 0, -1):
            if a[i] <= max(a[:i]):
                a[i] += 1
                for j in range(i + 1, n):
                    a[j] = 0
                break
        else:
            return


def delta_for_partition(rho_psi, sigma_psi, partition, metric="trace"):
    """delta_P = sum over parts A of (1/|A|) d(tr_rest rho, tr_rest sigma)."""
    d = _BASE_METRICS[metric]
    total = 0.0
    for part in partition:
        total += d(partial_trace(rho_psi, part), partial_trace(sigma_psi, part)) / len(part)
    return total


def qhd_exhaustive(rho_psi, sigma_psi, metric="trace"):
    """Quantum Hamming distance by enumerating every set partition (n <= 8).

    Subset distances are cached by bitmask, so the 4140 partitions at n = 8
    reuse 255 partial-trace computations. Returns (value, partition); ties
    resolve to the first maximum in enumeration order.
    """
    rho_psi = np.asarray(rho_psi, dtype=complex)
    sigma_psi = np.asarray(sigma_psi, dtype=complex)
    if rho_psi.size != sigma_psi.size:
        raise ValueError("states must have the same qubit count")
    n = int(round(np.log2(rho_psi.size)))
    if n > MAX_PARTITION_QUBITS:
        raise ValueError(f"partition enumeration capped at {MAX_PARTITION_QUBITS} qubits, got {n}")
    d = _BASE_METRICS[metric]

    subset_distance = {}
    for mask in range(1, 1 << n):
        part = tuple(i for i in range(n) if mask & (1 << i))
        subset_distance[mask] = d(
            partial_trace(rho_psi, part), partial_trace(sigma_psi, part)
        ) / len(part)

    best = -np.inf
    best_partition = None
    for partition in set_partitions(n):
        val = sum(subset_distance[sum(1 << i for i in part)] for part in partition)
        if val > best:
            best = val
            best_partition = partition
    return float(best), best_partition
