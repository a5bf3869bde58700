"""Discrete-symmetry operators P, T, C of the two-level theory.

P is spatial reflection (sigma1 in this basis), T is complex conjugation,
and C is the hidden symmetry that repairs the indefinite PT norm.  C is
synthesized two independent ways, from its closed form in alpha and from
outer-product sums over the normalized eigenvectors, and the agreement
between the constructions is part of the validation report.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ExceptionalPoint
from .hamiltonian import (
    COS_ALPHA_FLOOR,
    DEFAULT_PHASE_TOL,
    PTParams,
    build_pt_matrix,
    derive_pt,
    pt_eigenvectors_normalized,
    pt_params_for_alpha,
)


def apply_T(v: np.ndarray) -> np.ndarray:
    """Time reversal: entrywise complex conjugation (an involution)."""
    return np.conjugate(v)


def parity_matrix() -> np.ndarray:
    """The reflection [[0, 1], [1, 0]]."""
    return np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)


def pt_apply(v: np.ndarray) -> np.ndarray:
    """The combined PT action P conj(v): conjugate, then swap components."""
    c = np.conjugate(v)
    return np.array([c[1], c[0]])


def c_matrix_closed(alpha: float, floor: float = COS_ALPHA_FLOOR) -> np.ndarray:
    """(1/cos a) [[i sin a, 1], [1, -i sin a]]: traceless, det -1, squares to I."""
    ca = math.cos(alpha)
    if abs(ca) <= floor:
        raise ExceptionalPoint(f"cos(alpha) = {ca:.3g}: the C operator diverges")
    sa = math.sin(alpha)
    return np.array([[1j * sa, 1.0], [1.0, -1j * sa]], dtype=complex) / ca


def c_from_eigenvectors(e_plus: np.ndarray, e_minus: np.ndarray) -> np.ndarray:
    """Sum of |v>(PT v)^t outer products over both normalized eigenvectors."""
    return np.outer(e_minus, pt_apply(e_minus)) + np.outer(e_plus, pt_apply(e_plus))


def p_from_eigenvectors(e_plus: np.ndarray, e_minus: np.ndarray) -> np.ndarray:
    """|v_+>(v_+^*)^t - |v_->(v_-^*)^t; the diagonals cancel, leaving sigma1."""
    return np.outer(e_plus, np.conjugate(e_plus)) - np.outer(e_minus, np.conjugate(e_minus))


def completeness_residual(e_plus: np.ndarray, e_minus: np.ndarray) -> float:
    """Max-entry deviation of |v_+>(PT v_+)^t - |v_->(PT v_-)^t from the identity."""
    acc = np.outer(e_plus, pt_apply(e_plus)) - np.outer(e_minus, pt_apply(e_minus))
    return float(np.abs(acc - np.eye(2)).max())


@dataclass(frozen=True)
class ValidationReport:
    """Max-entry residuals of the defining operator identities."""

    c_squared_residual: float
    ch_commutator_residual: float
    cpt_commutator_residual: float
    completeness_residual: float
    p_reconstruction_residual: float

    def max_residual(self) -> float:
        return max(
            self.c_squared_residual,
            self.ch_commutator_residual,
            self.cpt_commutator_residual,
            self.completeness_residual,
            self.p_reconstruction_residual,
        )


@dataclass(frozen=True)
class OperatorSet:
    """Normalized P and C for one parameter point, with validation residuals."""

    P: np.ndarray
    C: np.ndarray
    alpha: float
    residuals: ValidationReport


def build_operator_set(p: PTParams, tol: float = DEFAULT_PHASE_TOL) -> OperatorSet:
    """Synthesize P and C and measure every operator identity against H.

    Residuals recorded (all in the max-entry norm): C^2 - I, the commutator
    C H - H C, the antilinear-compatibility restatement C P - P conj(C),
    the alternating-sign completeness sum, and the difference between the
    reconstructed and the closed-form parity.
    """
    d = derive_pt(p, tol)
    h = build_pt_matrix(p)
    pm = parity_matrix()
    cc = c_matrix_closed(d.alpha)
    e_plus, e_minus = pt_eigenvectors_normalized(d)
    eye = np.eye(2)
    report = ValidationReport(
        c_squared_residual=float(np.abs(cc @ cc - eye).max()),
        ch_commutator_residual=float(np.abs(cc @ h - h @ cc).max()),
        cpt_commutator_residual=float(np.abs(cc @ pm - pm @ np.conjugate(cc)).max()),
        completeness_residual=completeness_residual(e_plus, e_minus),
        p_reconstruction_residual=float(
            np.abs(p_from_eigenvectors(e_plus, e_minus) - pm).max()
        ),
    )
    return OperatorSet(P=pm, C=cc, alpha=d.alpha, residuals=report)


def validate_operators(p: PTParams, tol: float = DEFAULT_PHASE_TOL) -> ValidationReport:
    """Residual report alone; see build_operator_set."""
    return build_operator_set(p, tol).residuals


def operator_set_for_alpha(alpha: float, s: float = 1.0) -> OperatorSet:
    """Operator set at a directly chosen mixing angle."""
    return build_operator_set(pt_params_for_alpha(alpha, s))
