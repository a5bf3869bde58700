"""Two-level PT-symmetric quantum mechanics toolkit.

Builds the non-Hermitian family [[r e^{i psi}, s], [s, r e^{-i psi}]] and
its Hermitian counterpart, synthesizes the P, T, C symmetry operators,
provides the Dirac/PT/CPT pairings, evolves states in closed form, and
compares minimal transition times between the two theories.
"""

__version__ = "0.1.0"

from .algebra import PauliDecomp, mat_exp_oracle, pauli_compose, pauli_decompose
from .brachistochrone import (
    SweepRow,
    TransitionResult,
    equivalence_sweep,
    hermitian_transition_time,
    matched_row,
    pt_tau_star,
    pt_transition_times,
)
from .errors import (
    BrokenPhase,
    DomainError,
    ExceptionalPoint,
    NonFinite,
    NotNormalized,
    ZeroOrNegativeNorm,
)
from .evolution import (
    EvolutionConfig,
    EvolutionTrace,
    evolve_nu1_closed,
    initial_state,
    propagator_hermitian,
    propagator_pt,
    trace_evolution,
)
from .hamiltonian import (
    HermitianDerived,
    HermitianParams,
    PhaseClass,
    PTDerived,
    PTParams,
    build_hermitian_matrix,
    build_pt_matrix,
    classify_phase,
    derive_hermitian,
    derive_pt,
    pt_eigenvectors_normalized,
    pt_eigenvectors_raw,
    pt_params_for_alpha,
)
from .inner_product import (
    PairingKind,
    angular_distance,
    cpt_normalize,
    cpt_product,
    dirac_product,
    pt_product,
)
from .symmetry_ops import (
    OperatorSet,
    ValidationReport,
    apply_T,
    build_operator_set,
    c_from_eigenvectors,
    c_matrix_closed,
    completeness_residual,
    operator_set_for_alpha,
    p_from_eigenvectors,
    parity_matrix,
    pt_apply,
    validate_operators,
)

__all__ = [
    "__version__",
    "PauliDecomp", "mat_exp_oracle", "pauli_compose", "pauli_decompose",
    "SweepRow", "TransitionResult", "equivalence_sweep",
    "hermitian_transition_time", "matched_row", "pt_tau_star", "pt_transition_times",
    "BrokenPhase", "DomainError", "ExceptionalPoint", "NonFinite",
    "NotNormalized", "ZeroOrNegativeNorm",
    "EvolutionConfig", "EvolutionTrace", "evolve_nu1_closed", "initial_state",
    "propagator_hermitian", "propagator_pt", "trace_evolution",
    "HermitianDerived", "HermitianParams", "PhaseClass", "PTDerived", "PTParams",
    "build_hermitian_matrix", "build_pt_matrix", "classify_phase",
    "derive_hermitian", "derive_pt", "pt_eigenvectors_normalized",
    "pt_eigenvectors_raw", "pt_params_for_alpha",
    "PairingKind", "angular_distance", "cpt_normalize", "cpt_product",
    "dirac_product", "pt_product",
    "OperatorSet", "ValidationReport", "apply_T", "build_operator_set",
    "c_from_eigenvectors", "c_matrix_closed", "completeness_residual",
    "operator_set_for_alpha", "p_from_eigenvectors", "parity_matrix",
    "pt_apply", "validate_operators",
]
