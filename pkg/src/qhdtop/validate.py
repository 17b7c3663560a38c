"""Cross-implementation validation battery driven by the `oracle-validate` command.

Each check compares a fast symmetric-subspace path against the exponential
full-space reference and reports a residual with its tolerance. The
`corrupt_kick` hook deliberately breaks the symmetric kick phases so the
battery can demonstrate that it actually detects convention errors.
"""

from dataclasses import dataclass

import numpy as np

from . import oracle
from .dicke import coherent_state, ln_binomial, reduced_m_qubit
from .floquet import FloquetCache, KickedTopConfig, build_cache, evolve
from .metrics import qhd_symmetric_exact
from .sampling import run_rng, sample_initial

__all__ = ["CheckResult", "validation_battery"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    residual: float
    tolerance: float

    @property
    def passed(self):
        return self.residual <= self.tolerance


def _dicke_embedding(m):
    # (2^m, m+1) isometry mapping Dicke-m amplitudes to the computational basis
    pc = np.array([b.bit_count() for b in range(1 << m)])
    emb = np.zeros((1 << m, m + 1))
    emb[np.arange(1 << m), pc] = np.exp(-0.5 * ln_binomial(m, pc))
    return emb


def _corrupted_cache(cache):
    # k-dependent phase error: invisible to norms, fatal to the dynamics
    n = cache.n
    k = np.arange(n + 1)
    bad = cache.kick_phases * np.exp(1j * k / (4.0 * n))
    return FloquetCache(config=cache.config, kick_phases=bad, rotation=cache.rotation)


def validation_battery(n, seed, draws=5, steps=50, corrupt_kick=False):
    """Run the full fast-path-vs-oracle battery at n qubits (n <= 8).

    Returns a list of CheckResult: evolution equivalence, symmetric-subspace
    closure, reduction equivalence, the computational-basis Hamming fixtures,
    and partition-DP vs exhaustive enumeration.
    """
    if not 2 <= n <= oracle.MAX_PARTITION_QUBITS:
        raise ValueError(f"oracle validation needs 2 <= n <= {oracle.MAX_PARTITION_QUBITS}, got {n}")
    results = []

    evolve_res = 0.0
    closure_res = 0.0
    reduction_res = {m: 0.0 for m in range(1, min(3, n) + 1)}
    dp_res = 0.0
    for draw in range(draws):
        rng = run_rng(seed, draw)
        theta, phi = sample_initial(rng)
        alpha = rng.uniform(0.0, 6.0)
        config = KickedTopConfig(n=n, alpha=alpha)
        cache = build_cache(config)
        if corrupt_kick:
            cache = _corrupted_cache(cache)
        amps0 = coherent_state(n, theta / 2.0, phi)
        traj = evolve(amps0, cache, steps, renormalize=False)

        psi = oracle.dicke_to_full(amps0)
        for _ in range(steps):
            psi = oracle.full_floquet(psi, alpha, config.beta)
        evolve_res = max(evolve_res, float(np.max(np.abs(oracle.dicke_to_full(traj[-1]) - psi))))
        _, residual = oracle.full_to_dicke(psi)
        closure_res = max(closure_res, residual)

        for m in reduction_res:
            emb = _dicke_embedding(m)
            sym = emb @ reduced_m_qubit(traj[-1], m) @ emb.T
            ref = oracle.partial_trace(psi, range(m))
            reduction_res[m] = max(reduction_res[m], float(np.max(np.abs(sym - ref))))

        # distance between the evolved state and a few-steps-earlier one
        other = traj[max(0, steps - 3)]
        dp_val, _ = qhd_symmetric_exact(traj[-1], other, max_part=n)
        ex_val, _ = oracle.qhd_exhaustive(oracle.dicke_to_full(traj[-1]), oracle.dicke_to_full(other))
        dp_res = max(dp_res, abs(dp_val - ex_val))

    results.append(CheckResult("evolution equivalence (symmetric vs full)", evolve_res, 1e-10))
    results.append(CheckResult("symmetric-subspace closure of full evolution", closure_res, 1e-10))
    for m, res in reduction_res.items():
        results.append(CheckResult(f"reduction equivalence m={m}", res, 1e-10))

    psi1 = oracle.computational_state([0] * n)
    psi2 = oracle.computational_state([0] * (n - 1) + [1])
    psi3 = oracle.computational_state([1] * n)
    for name, pair, expect in [
        ("hamming fixture d(|0..0>,|0..01>) = 1", (psi1, psi2), 1.0),
        (f"hamming fixture d(|0..0>,|1..1>) = {n}", (psi1, psi3), float(n)),
        (f"hamming fixture d(|0..01>,|1..1>) = {n - 1}", (psi2, psi3), float(n - 1)),
    ]:
        value, _ = oracle.qhd_exhaustive(*pair)
        results.append(CheckResult(name, abs(value - expect), 1e-12))

    results.append(CheckResult("partition DP vs exhaustive enumeration", dp_res, 1e-9))
    return results
