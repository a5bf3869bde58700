import cmath
import math

import numpy as np
import pytest

from ptqm import (
    ExceptionalPoint,
    PTParams,
    apply_T,
    build_operator_set,
    build_pt_matrix,
    c_from_eigenvectors,
    c_matrix_closed,
    completeness_residual,
    derive_pt,
    operator_set_for_alpha,
    p_from_eigenvectors,
    parity_matrix,
    pt_eigenvectors_normalized,
    pt_params_for_alpha,
    validate_operators,
)


def normalized_pair(p: PTParams):
    return pt_eigenvectors_normalized(derive_pt(p))


def test_apply_T_examples():
    assert np.array_equal(apply_T(np.array([1, 1j])), np.array([1, -1j]))
    alpha = 0.37
    v = np.array([1j * cmath.exp(-1j * alpha / 2), -1j * cmath.exp(1j * alpha / 2)])
    want = np.array([-1j * cmath.exp(1j * alpha / 2), 1j * cmath.exp(-1j * alpha / 2)])
    assert np.abs(apply_T(v) - want).max() < 1e-15


def test_apply_T_involution(rng):
    for _ in range(20):
        v = rng.uniform(-1, 1, 2) + 1j * rng.uniform(-1, 1, 2)
        assert np.array_equal(apply_T(apply_T(v)), v)


def test_parity_examples():
    p = parity_matrix()
    assert np.array_equal(p @ np.array([1.0, 0.0]), np.array([0.0, 1.0]))
    assert np.array_equal(p @ p, np.eye(2))
    assert np.array_equal(p, np.array([[0, 1], [1, 0]]))  # sigma1


def test_c_closed_hermitian_limit_equals_parity():
    assert np.array_equal(c_matrix_closed(0.0), parity_matrix())


def test_c_closed_printed_matrix():
    got = c_matrix_closed(math.pi / 6)
    want = (2 / math.sqrt(3)) * np.array([[0.5j, 1.0], [1.0, -0.5j]])
    assert np.abs(got - want).max() < 1e-15


def test_c_closed_trace_and_determinant():
    c = c_matrix_closed(0.3)
    assert abs(c[0, 0] + c[1, 1]) < 1e-15
    det = c[0, 0] * c[1, 1] - c[0, 1] * c[1, 0]
    assert det == pytest.approx(-1.0, abs=1e-14)


def test_c_closed_exceptional_point():
    with pytest.raises(ExceptionalPoint):
        c_matrix_closed(math.pi / 2)


def test_c_from_eigenvectors_hermitian_limit():
    e_plus, e_minus = normalized_pair(PTParams(0, 1, 0))
    assert np.abs(c_from_eigenvectors(e_plus, e_minus) - parity_matrix()).max() < 1e-15


def test_c_constructions_agree(grid):
    for p in grid:
        d = derive_pt(p)
        e_plus, e_minus = normalized_pair(p)
        got = c_from_eigenvectors(e_plus, e_minus)
        assert np.abs(got - c_matrix_closed(d.alpha)).max() < 1e-12


def test_c_eigen_action(grid):
    # C fixes the plus eigenvector and flips the minus one
    for p in grid:
        c = c_matrix_closed(derive_pt(p).alpha)
        e_plus, e_minus = normalized_pair(p)
        assert np.abs(c @ e_plus - e_plus).max() < 1e-12
        assert np.abs(c @ e_minus + e_minus).max() < 1e-12


def test_p_from_eigenvectors_cases_and_grid(grid):
    e_plus, e_minus = normalized_pair(PTParams(0, 1, 0))
    assert np.abs(p_from_eigenvectors(e_plus, e_minus) - parity_matrix()).max() < 1e-15
    ops = operator_set_for_alpha(-0.4)
    assert ops.residuals.p_reconstruction_residual < 1e-12
    for p in grid:
        e_plus, e_minus = normalized_pair(p)
        assert np.abs(p_from_eigenvectors(e_plus, e_minus) - parity_matrix()).max() < 1e-12


def test_completeness_residual_cases(grid):
    e_plus, e_minus = normalized_pair(PTParams(0, 1, 0))
    assert completeness_residual(e_plus, e_minus) < 1e-15
    for p in [PTParams(1, 2, math.pi / 6), PTParams(1.7, 2, math.pi / 3), *grid]:
        e_plus, e_minus = normalized_pair(p)
        assert completeness_residual(e_plus, e_minus) < 1e-12


def test_validate_operators_hermitian_case():
    report = validate_operators(PTParams(0, 1, 0))
    assert report.max_residual() < 1e-14


def test_validate_operators_generic_case():
    report = validate_operators(PTParams(1, 2, math.pi / 6))
    assert report.max_residual() < 1e-12


def test_validate_operators_exceptional_point():
    with pytest.raises(ExceptionalPoint):
        validate_operators(PTParams(1, 1, math.pi / 2))


def test_commutation_rules_on_grid(grid):
    for p in grid:
        report = validate_operators(p)
        assert report.c_squared_residual < 1e-12
        assert report.ch_commutator_residual < 1e-12
        assert report.cpt_commutator_residual < 1e-12


def test_cpt_compatibility_matrix_identity(grid):
    # C P = P conj(C), the finite-dimensional restatement of [C, PT] = 0
    pm = parity_matrix()
    for p in grid:
        c = c_matrix_closed(derive_pt(p).alpha)
        assert np.abs(c @ pm - pm @ np.conjugate(c)).max() < 1e-12


def test_operator_set_carries_hamiltonian_commutator(grid):
    for p in grid:
        ops = build_operator_set(p)
        h = build_pt_matrix(p)
        assert np.abs(ops.C @ h - h @ ops.C).max() < 1e-12
        assert ops.alpha == derive_pt(p).alpha


def test_operator_set_for_alpha_matches_closed_form():
    ops = operator_set_for_alpha(0.9)
    assert np.abs(ops.C - c_matrix_closed(0.9)).max() < 1e-13
    assert ops.residuals.max_residual() < 1e-12


def test_sign_choice_is_immaterial():
    # flipping the normalization sign of either eigenvector leaves both
    # reconstructed operators unchanged (quadratic dependence)
    p = pt_params_for_alpha(-0.7)
    e_plus, e_minus = normalized_pair(p)
    c_ref = c_from_eigenvectors(e_plus, e_minus)
    p_ref = p_from_eigenvectors(e_plus, e_minus)
    assert np.abs(c_from_eigenvectors(-e_plus, e_minus) - c_ref).max() < 1e-15
    assert np.abs(c_from_eigenvectors(e_plus, -e_minus) - c_ref).max() < 1e-15
    assert np.abs(p_from_eigenvectors(-e_plus, -e_minus) - p_ref).max() < 1e-15
