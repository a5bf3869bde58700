import math

import numpy as np
import pytest

from ptqm import (
    DomainError,
    EvolutionConfig,
    HermitianParams,
    PTParams,
    build_hermitian_matrix,
    build_pt_matrix,
    c_matrix_closed,
    cpt_normalize,
    derive_hermitian,
    derive_pt,
    evolve_nu1_closed,
    initial_state,
    mat_exp_oracle,
    propagator_hermitian,
    propagator_pt,
    pt_eigenvectors_normalized,
    trace_evolution,
)
from ptqm.algebra import SIGMA1
from ptqm.symmetry_ops import build_operator_set

TIMES = (0.1, 0.7, 3.0)
NU1 = np.array([1.0, 0.0], dtype=complex)


def hermitian_comparison_grid():
    return [
        HermitianParams(s=s, u=u, r=r, psi=psi)
        for s in (1.0, 2.0)
        for u in (-0.5, 1.0)
        for r in (0.0, 0.3, 1.7)
        for psi in (0.0, math.pi / 6, -math.pi / 3)
    ]


def test_config_validation():
    with pytest.raises(DomainError):
        EvolutionConfig(hbar=0.0)
    with pytest.raises(DomainError):
        EvolutionConfig(tol=1e-3)


def test_propagator_pt_identity_at_t0(grid):
    for p in grid:
        assert np.abs(propagator_pt(p, 0.0) - np.eye(2)).max() < 1e-15


def test_propagator_pt_rabi_rotation():
    # pure sigma1 generator, quarter period: U = -i sigma1
    got = propagator_pt(PTParams(0, 1, 0), math.pi / 2)
    assert np.abs(got - (-1j) * SIGMA1).max() < 1e-14


def test_propagator_pt_matches_series(grid):
    for p in grid:
        h = build_pt_matrix(p)
        for t in TIMES:
            closed = propagator_pt(p, t)
            series = mat_exp_oracle(-1j * h * t)
            assert np.abs(closed - series).max() < 1e-10


def test_propagator_pt_group_law(grid):
    for p in grid:
        u = propagator_pt(p, 0.4) @ propagator_pt(p, 1.1)
        assert np.abs(u - propagator_pt(p, 1.5)).max() < 1e-10


def test_pauli_split_direction_squares_to_identity(grid):
    # mu.mu = 1 as a complex dot product, equivalently (sigma.mu)^2 = I
    for p in grid:
        d = derive_pt(p)
        mu = (2.0 / d.omega) * np.array(
            [p.s, 0.0, 1j * p.r * math.sin(p.psi)], dtype=complex
        )
        assert mu @ mu == pytest.approx(1.0, abs=1e-12)
        k = c_matrix_closed(d.alpha)
        assert np.abs(k @ k - np.eye(2)).max() < 1e-12


def test_evolve_nu1_initial_condition(grid):
    for p in grid:
        assert np.abs(evolve_nu1_closed(p, 0.0) - NU1).max() < 1e-12


def test_evolve_nu1_reaches_nu2_at_minimal_time():
    p = PTParams(1, 2, math.pi / 6)
    d = derive_pt(p)
    tau = (2.0 * d.alpha + math.pi) / d.omega
    state = evolve_nu1_closed(p, tau)
    assert abs(state[0]) < 1e-12
    # arrival is nu2 up to the global phase, with unit amplitude
    assert abs(state[1]) == pytest.approx(1.0, abs=1e-12)


def test_evolve_nu1_consistent_with_propagator(grid):
    for p in grid:
        for t in (0.4, 1.3):
            direct = evolve_nu1_closed(p, t)
            via_propagator = propagator_pt(p, t) @ NU1
            assert np.abs(direct - via_propagator).max() < 1e-12


def test_propagator_hermitian_identity_at_t0():
    assert np.abs(propagator_hermitian(HermitianParams(2, 1, 1, 0.3), 0.0) - np.eye(2)).max() < 1e-15


def test_propagator_hermitian_transfer_amplitude():
    # |b(t)| = (2r/w') |sin(w' t / 2hbar)| on the initial state (1, 0)
    p = HermitianParams(s=1.2, u=0.4, r=0.7, psi=0.5)
    w = derive_hermitian(p).omega_prime
    for t in (0.3, 0.9, 2.2):
        state = propagator_hermitian(p, t) @ NU1
        want = (2 * p.r / w) * abs(math.sin(0.5 * w * t))
        assert abs(state[1]) == pytest.approx(want, abs=1e-12)


def test_propagator_hermitian_full_transfer_at_bound():
    # s = u and r = w'/2: complete transfer exactly at t = pi hbar / w'
    p = HermitianParams(s=0.5, u=0.5, r=1.0, psi=0.0)
    w = derive_hermitian(p).omega_prime
    state = propagator_hermitian(p, math.pi / w) @ NU1
    assert abs(state[1]) == pytest.approx(1.0, abs=1e-12)
    assert abs(state[0]) < 1e-12


def test_propagator_hermitian_unitary_and_matches_series():
    for p in hermitian_comparison_grid():
        h = build_hermitian_matrix(p)
        for t in TIMES:
            u = propagator_hermitian(p, t)
            assert np.abs(u.conj().T @ u - np.eye(2)).max() < 1e-10
            assert np.abs(u - mat_exp_oracle(-1j * h * t)).max() < 1e-10


def test_propagator_hermitian_group_law():
    for p in hermitian_comparison_grid():
        u = propagator_hermitian(p, 0.4) @ propagator_hermitian(p, 1.1)
        assert np.abs(u - propagator_hermitian(p, 1.5)).max() < 1e-10


def test_propagator_hermitian_degenerate_gap():
    p = HermitianParams(s=0.8, u=0.8, r=0.0, psi=0.0)
    got = propagator_hermitian(p, 2.0)
    want = np.exp(-1j * 0.8 * 2.0) * np.eye(2)
    assert np.abs(got - want).max() < 1e-15


def test_initial_state_names():
    p = PTParams(1, 2, math.pi / 6)
    assert np.array_equal(initial_state("nu1", p), NU1)
    assert np.array_equal(initial_state("nu2", p), np.array([0, 1], dtype=complex))
    e_plus, e_minus = pt_eigenvectors_normalized(derive_pt(p))
    assert np.array_equal(initial_state("eps+", p), e_plus)
    assert np.array_equal(initial_state("eps-", p), e_minus)
    with pytest.raises(DomainError):
        initial_state("plus", p)


def test_trace_validation():
    p = PTParams(1, 2, math.pi / 6)
    with pytest.raises(DomainError):
        trace_evolution(p, NU1, 1.0, 1)
    with pytest.raises(DomainError):
        trace_evolution(p, NU1, -1.0, 10)


def test_trace_zero_length_single_sample():
    p = PTParams(1, 2, math.pi / 6)
    trace = trace_evolution(p, NU1, 0.0, 11)
    assert len(trace.times) == 1
    assert np.array_equal(trace.states[0], NU1)


def test_trace_eigenstate_conserves_cpt_norm(grid):
    for p in grid:
        d = derive_pt(p)
        e_plus, _ = pt_eigenvectors_normalized(d)
        trace = trace_evolution(p, e_plus, 10.0 / d.omega, 101)
        assert np.abs(trace.cpt_norms - 1.0).max() < 1e-10
        assert np.all(np.diff(trace.times) > 0)


def test_trace_hermitian_limit_keeps_dirac_norm():
    p = PTParams(1, 2, 0.0)
    trace = trace_evolution(p, np.array([0.6, 0.8j]), 5.0, 64)
    assert np.abs(trace.dirac_norms - trace.dirac_norms[0]).max() < 1e-12


def test_trace_dirac_norm_oscillates():
    # only the CPT norm is physical: the Dirac norm swings visibly
    p = PTParams(1, 2, math.pi / 6)
    d = derive_pt(p)
    ops = build_operator_set(p)
    state0 = cpt_normalize(NU1, ops)
    trace = trace_evolution(p, state0, 10.0 / d.omega, 101)
    assert np.abs(trace.cpt_norms - 1.0).max() < 1e-10
    assert np.abs(trace.dirac_norms - trace.dirac_norms[0]).max() > 1e-3
