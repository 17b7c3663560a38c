"""Hypersensitivity to initial-state perturbation in the multi-qubit kicked top.

Symmetric n-qubit states are evolved in the (n+1)-dimensional Dicke basis,
and the divergence between an original and a perturbed trajectory is measured
by the quantum Hamming distance - a partition-maximised sum of subsystem
distances that, unlike the global overlap, is not frozen by unitarity.
"""

__version__ = "0.1.0"

from .classical import (
    ChaosProbe,
    classical_step,
    classify_initial_condition,
    quantum_to_classical,
    trajectory,
)
from .dicke import (
    coherent_state,
    dicke_state,
    linear_entropy,
    reduce_symmetric_density,
    reduced_m_qubit,
    reduced_single_qubit,
)
from .experiments import (
    DistanceCurve,
    EhrenfestScan,
    TransitionRecord,
    averaged_distance_curve,
    ehrenfest_scan,
    entropy_curve,
    find_transition_pair,
    transition_compare,
)
from .floquet import FloquetCache, KickedTopConfig, build_cache, evolve, step
from .metrics import (
    bures_length,
    check_singleton_optimality,
    delta_partition,
    qhd_symmetric_exact,
    qhd_symmetric_single,
    trace_distance,
)
from .sampling import (
    EnsembleConfig,
    PerturbationSpec,
    derive_run_seed,
    perturb,
    run_rng,
    sample_axis,
    sample_initial,
)

__all__ = [
    "__version__",
    "ChaosProbe",
    "DistanceCurve",
    "EhrenfestScan",
    "EnsembleConfig",
    "FloquetCache",
    "KickedTopConfig",
    "PerturbationSpec",
    "TransitionRecord",
    "averaged_distance_curve",
    "build_cache",
    "bures_length",
    "check_singleton_optimality",
    "classical_step",
    "classify_initial_condition",
    "coherent_state",
    "delta_partition",
    "derive_run_seed",
    "dicke_state",
    "ehrenfest_scan",
    "entropy_curve",
    "evolve",
    "find_transition_pair",
    "linear_entropy",
    "perturb",
    "qhd_symmetric_exact",
    "qhd_symmetric_single",
    "quantum_to_classical",
    "reduce_symmetric_density",
    "reduced_m_qubit",
    "reduced_single_qubit",
    "run_rng",
    "sample_axis",
    "sample_initial",
    "step",
    "trace_distance",
    "trajectory",
    "transition_compare",
]
