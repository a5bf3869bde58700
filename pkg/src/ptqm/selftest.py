"""Whole-library invariant checks behind the ``selftest`` command.

Each check reports the worst value observed over its parameter grid, the
threshold it is compared against, and the comparison direction: "<" rows
are residuals that must stay small, ">" rows certify an effect is actually
present (Dirac-norm oscillation, eigenstate non-orthogonality).  Random
draws use a fixed seed so repeated runs are byte-identical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import mat_exp_oracle, pauli_compose, pauli_decompose
from .brachistochrone import equivalence_sweep, pt_tau_star
from .evolution import (
    EvolutionConfig,
    evolve_nu1_closed,
    propagator_hermitian,
    propagator_pt,
    trace_evolution,
)
from .hamiltonian import (
    HermitianParams,
    PhaseClass,
    PTParams,
    build_hermitian_matrix,
    build_pt_matrix,
    classify_phase,
    derive_pt,
    pt_eigenvectors_normalized,
    pt_params_for_alpha,
)
from .inner_product import cpt_normalize, cpt_product, dirac_product, pt_product
from .symmetry_ops import build_operator_set

GRID_R = (0.0, 0.3, 1.0, 1.7)
GRID_S = (1.0, 2.0)
GRID_PSI = (0.0, math.pi / 6, -math.pi / 6, math.pi / 3, -math.pi / 3)
ORACLE_TIMES = (0.1, 0.7, 3.0)


@dataclass(frozen=True)
class Check:
    check: str
    value: float
    threshold: float
    comparison: str  # "<" or ">"
    passed: bool


def _check(name: str, value: float, threshold: float, comparison: str = "<") -> Check:
    ok = value < threshold if comparison == "<" else value > threshold
    return Check(check=name, value=float(value), threshold=threshold,
                 comparison=comparison, passed=bool(ok))


def standard_grid() -> list[PTParams]:
    """All unbroken points of the reference r/s/psi grid."""
    grid = []
    for r in GRID_R:
        for s in GRID_S:
            for psi in GRID_PSI:
                p = PTParams(r=r, s=s, psi=psi)
                if classify_phase(p) is PhaseClass.UNBROKEN:
                    grid.append(p)
    return grid


def hermitian_grid() -> list[HermitianParams]:
    return [
        HermitianParams(s=s, u=u, r=r, psi=psi)
        for s in (1.0, 2.0)
        for u in (-0.5, 1.0)
        for r in (0.0, 0.3, 1.7)
        for psi in (0.0, math.pi / 6, -math.pi / 3)
    ]


def _max_entry(m) -> float:
    return float(np.abs(m).max())


def run_selftest(hbar: float = 1.0, tol: float | None = None) -> list[Check]:
    """Run every invariant suite; ``tol`` overrides the residual thresholds
    (the "<" rows) when given, which is expected to fail below roughly 1e-15."""
    cfg = EvolutionConfig(hbar=hbar)
    grid = standard_grid()
    eye = np.eye(2)
    nu1 = np.array([1.0, 0.0], dtype=complex)
    nu2 = np.array([0.0, 1.0], dtype=complex)
    checks: list[Check] = []

    def residual(name: str, value: float, default_threshold: float) -> None:
        checks.append(_check(name, value, tol if tol is not None else default_threshold))

    # Pauli round trip on fixed-seed random matrices
    rng = np.random.default_rng(20240811)
    worst = 0.0
    for _ in range(200):
        m = rng.uniform(-2, 2, (2, 2)) + 1j * rng.uniform(-2, 2, (2, 2))
        worst = max(worst, _max_entry(pauli_compose(pauli_decompose(m)) - m))
    residual("pauli_roundtrip", worst, 1e-14)

    # series exponential sanity: exp(A) exp(-A) = I and the diagonal group law
    worst = 0.0
    for _ in range(50):
        a = rng.uniform(-2, 2, (2, 2)) + 1j * rng.uniform(-2, 2, (2, 2))
        worst = max(worst, _max_entry(mat_exp_oracle(a) @ mat_exp_oracle(-a) - eye))
    residual("series_exp_inverse", worst, 1e-10)
    worst = 0.0
    for _ in range(50):
        d = np.diag(rng.uniform(-2, 2, 2) + 1j * rng.uniform(-2, 2, 2))
        x, y = rng.uniform(-1.5, 1.5, 2)
        worst = max(
            worst,
            _max_entry(mat_exp_oracle(x * d) @ mat_exp_oracle(y * d) - mat_exp_oracle((x + y) * d)),
        )
    residual("series_exp_group_law", worst, 1e-10)

    # operator identities over the grid
    ops_worst = {"c_squared": 0.0, "ch_commutator": 0.0, "cpt_compatibility": 0.0,
                 "completeness": 0.0, "parity_reconstruction": 0.0}
    sig_worst = 0.0
    ortho_worst = 0.0
    eig_action_worst = 0.0
    overlap_gap_worst = 0.0
    dirac_eigen_min = math.inf
    for p in grid:
        ops = build_operator_set(p)
        rep = ops.residuals
        ops_worst["c_squared"] = max(ops_worst["c_squared"], rep.c_squared_residual)
        ops_worst["ch_commutator"] = max(ops_worst["ch_commutator"], rep.ch_commutator_residual)
        ops_worst["cpt_compatibility"] = max(ops_worst["cpt_compatibility"], rep.cpt_commutator_residual)
        ops_worst["completeness"] = max(ops_worst["completeness"], rep.completeness_residual)
        ops_worst["parity_reconstruction"] = max(ops_worst["parity_reconstruction"], rep.p_reconstruction_residual)

        d = derive_pt(p)
        e_plus, e_minus = pt_eigenvectors_normalized(d)
        sig_worst = max(
            sig_worst,
            abs(pt_product(e_plus, e_plus, ops.P) - 1.0),
            abs(pt_product(e_minus, e_minus, ops.P) + 1.0),
            abs(pt_product(e_plus, e_minus, ops.P)),
        )
        ortho_worst = max(
            ortho_worst,
            abs(cpt_product(e_plus, e_plus, ops) - 1.0),
            abs(cpt_product(e_minus, e_minus, ops) - 1.0),
            abs(cpt_product(e_plus, e_minus, ops)),
            abs(cpt_product(e_minus, e_plus, ops)),
        )
        eig_action_worst = max(
            eig_action_worst,
            _max_entry(ops.C @ e_plus - e_plus),
            _max_entry(ops.C @ e_minus + e_minus),
        )
        overlap_gap_worst = max(
            overlap_gap_worst,
            abs(abs(cpt_product(nu2, nu1, ops)) - abs(math.tan(d.alpha))),
        )
        if d.alpha != 0.0:
            dirac_eigen_min = min(dirac_eigen_min, abs(dirac_product(e_plus, e_minus)))
    residual("c_squared", ops_worst["c_squared"], 1e-12)
    residual("ch_commutator", ops_worst["ch_commutator"], 1e-12)
    residual("cpt_compatibility", ops_worst["cpt_compatibility"], 1e-12)
    residual("completeness", ops_worst["completeness"], 1e-12)
    residual("parity_reconstruction", ops_worst["parity_reconstruction"], 1e-12)
    residual("pt_norm_signature", sig_worst, 1e-12)
    residual("cpt_orthonormality", ortho_worst, 1e-12)
    residual("c_eigen_action", eig_action_worst, 1e-12)
    residual("basis_overlap_tan_alpha", overlap_gap_worst, 1e-12)
    checks.append(_check("dirac_eigen_nonorthogonality", dirac_eigen_min, 1e-6, ">"))

    # closed-form propagators against the series exponential, plus group law
    worst_pt = 0.0
    worst_group = 0.0
    for p in grid:
        h = build_pt_matrix(p)
        for t in ORACLE_TIMES:
            u_closed = propagator_pt(p, t, cfg)
            u_series = mat_exp_oracle(-1j * h * t / cfg.hbar)
            worst_pt = max(worst_pt, _max_entry(u_closed - u_series))
        u1 = propagator_pt(p, 0.4, cfg)
        u2 = propagator_pt(p, 1.1, cfg)
        worst_group = max(worst_group, _max_entry(u1 @ u2 - propagator_pt(p, 1.5, cfg)))
    residual("propagator_pt_vs_series", worst_pt, 1e-10)
    worst_h = 0.0
    worst_unitary = 0.0
    for hp in hermitian_grid():
        hm = build_hermitian_matrix(hp)
        for t in ORACLE_TIMES:
            u_closed = propagator_hermitian(hp, t, cfg)
            u_series = mat_exp_oracle(-1j * hm * t / cfg.hbar)
            worst_h = max(worst_h, _max_entry(u_closed - u_series))
            worst_unitary = max(worst_unitary, _max_entry(u_closed.conj().T @ u_closed - eye))
        u1 = propagator_hermitian(hp, 0.4, cfg)
        u2 = propagator_hermitian(hp, 1.1, cfg)
        worst_group = max(worst_group, _max_entry(u1 @ u2 - propagator_hermitian(hp, 1.5, cfg)))
    residual("propagator_hermitian_vs_series", worst_h, 1e-10)
    residual("propagator_hermitian_unitarity", worst_unitary, 1e-10)
    residual("propagator_group_law", worst_group, 1e-10)

    # norm behaviour along traces: CPT constant, Dirac visibly oscillating
    cpt_drift_worst = 0.0
    dirac_swing_min = math.inf
    for p in grid:
        d = derive_pt(p)
        ops = build_operator_set(p)
        e_plus, _ = pt_eigenvectors_normalized(d)
        nu1_normalized = cpt_normalize(nu1, ops)
        span = 10.0 * cfg.hbar / d.omega
        for state0 in (nu1_normalized, e_plus):
            trace = trace_evolution(p, state0, span, 101, cfg)
            cpt_drift_worst = max(cpt_drift_worst, float(np.abs(trace.cpt_norms - 1.0).max()))
        if abs(d.alpha) > 0.1:
            trace = trace_evolution(p, nu1_normalized, span, 101, cfg)
            swing = float(np.abs(trace.dirac_norms - trace.dirac_norms[0]).max())
            dirac_swing_min = min(dirac_swing_min, swing)
    residual("cpt_norm_drift", cpt_drift_worst, 1e-10)
    checks.append(_check("dirac_norm_swing", dirac_swing_min, 1e-3, ">"))

    # brachistochrone: dynamical arrival at nu2 and the sweep equivalence law
    arrival_worst = 0.0
    for alpha in np.linspace(-1.49, 0.0, 10):
        p = pt_params_for_alpha(float(alpha))
        res = pt_tau_star(p, cfg)
        state = evolve_nu1_closed(p, res.tau, cfg)
        overlap = abs(dirac_product(nu2, state)) / math.sqrt(dirac_product(state, state).real)
        arrival_worst = max(arrival_worst, abs(overlap - 1.0))
    residual("transition_arrival_overlap", arrival_worst, 1e-10)

    sweep_worst = 0.0
    for row in equivalence_sweep(cfg=cfg):
        sweep_worst = max(
            sweep_worst,
            abs(row.tau_norm_pt - row.beta_pt),
            abs(row.tau_norm_h - row.beta_h),
            abs(row.beta_pt - row.beta_h),
        )
    residual("sweep_equivalence_law", sweep_worst, 1e-12)

    return checks


def all_passed(checks: list[Check]) -> bool:
    return all(c.passed for c in checks)


def first_failure(checks: list[Check]) -> Check | None:
    for c in checks:
        if not c.passed:
            return c
    return None
