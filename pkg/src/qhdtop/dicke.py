"""Symmetric n-qubit states in the Dicke basis.

A symmetric pure state of n qubits is stored as the (n+1)-vector of its
amplitudes a_k on the Dicke states |d_k^n>, where k counts the qubits in
|1> and |d_0^n> = |00...0>. Everything here is a pure function of numpy
arrays; inputs are never mutated.
"""

import numpy as np
from scipy.special import gammaln

__all__ = [
    "ln_binomial",
    "dicke_state",
    "coherent_state",
    "reduced_single_qubit",
    "reduced_m_qubit",
    "reduce_symmetric_density",
    "linear_entropy",
    "state_norm_error",
]


def ln_binomial(n, k):
    """log C(n, k), usable far beyond the overflow point of the binomial."""
    n = np.asarray(n, dtype=float)
    k = np.asarray(k, dtype=float)
    return gammaln(n + 1.0) - gammaln(k + 1.0) - gammaln(n - k + 1.0)


def dicke_state(n, k):
    """Amplitude vector of the Dicke state |d_k^n> (all weight on index k)."""
    if n < 1:
        raise ValueError(f"need at least one qubit, got n={n}")
    if not 0 <= k <= n:
        raise ValueError(f"excitation index k={k} outside 0..{n}")
    amps = np.zeros(n + 1, dtype=complex)
    amps[k] = 1.0
    return amps


def coherent_state(n, theta, phi):
    """Dicke amplitudes of the product state (cos(theta)|0> + e^{i phi} sin(theta)|1>)^n.

    a_k = sqrt(C(n,k)) cos(theta)^{n-k} (e^{i phi} sin(theta))^k, assembled in
    log space so binomial coefficients never overflow and far tails underflow
    to zero gracefully (stable up to n ~ 1e4 and beyond). Exact basis states
    are returned when sin(theta) or cos(theta) is exactly zero.
    """
    if n < 1:
        raise ValueError(f"need at least one qubit, got n={n}")
    c = np.cos(theta)
    s = np.sin(theta)
    if s == 0.0:
        amps = np.zeros(n + 1, dtype=complex)
        amps[0] = np.sign(c) ** n
        return amps
    if c == 0.0:
        amps = np.zeros(n + 1, dtype=complex)
        amps[n] = np.sign(s) ** n * np.exp(1j * n * phi)
        return amps
    k = np.arange(n + 1)
    ln_mag = 0.5 * ln_binomial(n, k) + (n - k) * np.log(abs(c)) + k * np.log(abs(s))
    phase = k * phi
    if c < 0.0:
        phase = phase + np.pi * (n - k)
    if s < 0.0:
        phase = phase + np.pi * k
    amps = np.exp(ln_mag + 1j * phase)
    amps /= np.linalg.norm(amps)
    return amps


def state_norm_error(amps):
    """|sum_k |a_k|^2 - 1| of an amplitude vector."""
    return abs(np.vdot(amps, amps).real - 1.0)


def reduced_single_qubit(amps):
    """Single-qubit reduced density matrix of a symmetric pure state, in O(n).

    Closed form: rho[p,q] = sum_l a_{p+l} conj(a_{q+l}) M_pq(n,l) with
    M_00 = (n-l)/n, M_01 = M_10 = sqrt((n-l)(l+1))/n, M_11 = (l+1)/n.
    """
    a = np.asarray(amps, dtype=complex)
    n = a.size - 1
    if n < 1:
        raise ValueError("amplitude vector must have length >= 2")
    l = np.arange(n)
    r00 = np.sum(np.abs(a[:n]) ** 2 * (n - l)) / n
    r11 = np.sum(np.abs(a[1:]) ** 2 * (l + 1)) / n
    r01 = np.sum(a[:n] * np.conj(a[1:]) * np.sqrt((n - l) * (l + 1.0))) / n
    return np.array([[r00, r01], [np.conj(r01), r11]], dtype=complex)


def _reduction_weights(n, m, p, q):
    # C(n-m,l) * C(n,p+l)^(-1/2) C(n,q+l)^(-1/2) * C(m,p)^(1/2) C(m,q)^(1/2),
    # evaluated in log space: C(1000,500) overflows any fixed-width float.
    l = np.arange(n - m + 1)
    ln_w = (
        ln_binomial(n - m, l)
        - 0.5 * (ln_binomial(n, p + l) + ln_binomial(n, q + l))
        + 0.5 * (ln_binomial(m, p) + ln_binomial(m, q))
    )
    return np.exp(ln_w)


def reduced_m_qubit(amps, m):
    """m-qubit reduced density matrix of a symmetric pure state, in the Dicke-m basis.

    Returns the (m+1)x(m+1) Hermitian matrix rho^(m) with
    rho[p,q] = sum_l a_{p+l} conj(a_{q+l}) * W(n,m,l,p,q), where W is the
    binomial-weight product of the symmetric partial trace.
    """
    a = np.asarray(amps, dtype=complex)
    n = a.size - 1
    if not 1 <= m <= n:
        raise ValueError(f"part size m={m} outside 1..{n}")
    L = n - m + 1
    rho = np.empty((m + 1, m + 1), dtype=complex)
    for p in range(m + 1):
        for q in range(p + 1):
            w = _reduction_weights(n, m, p, q)
            val = np.sum(a[p : p + L] * np.conj(a[q : q + L]) * w)
            rho[p, q] = val
            rho[q, p] = np.conj(val)
    return rho


def reduce_symmetric_density(rho, m):
    """m-qubit reduction of a symmetric-subspace density matrix.

    Same weights as reduced_m_qubit, applied to the shifted diagonals of the
    (n+1)x(n+1) input: rho_m[p,q] = sum_l W(n,m,l,p,q) rho[p+l, q+l].
    """
    rho = np.asarray(rho, dtype=complex)
    n = rho.shape[0] - 1
    if rho.shape != (n + 1, n + 1):
        raise ValueError("density matrix must be square")
    if not 1 <= m <= n:
        raise ValueError(f"part size m={m} outside 1..{n}")
    L = n - m + 1
    out = np.empty((m + 1, m + 1), dtype=complex)
    for p in range(m + 1):
        for q in range(p + 1):
            w = _reduction_weights(n, m, p, q)
            diag = np.diagonal(rho, offset=q - p)[q : q + L]
            val = np.sum(w * diag)
            out[p, q] = val
            out[q, p] = np.conj(val)
    return out


def linear_entropy(rho):
    """Linear entropy 1 - Tr(rho^2); 0 for pure states, 1/2 for a maximally mixed qubit."""
    rho = np.asarray(rho, dtype=complex)
    purity = np.trace(rho @ rho).real
    return 1.0 - purity
