"""Complex 2x2 kernel: Pauli algebra plus a power-series matrix exponential.

States are numpy arrays of shape (2,) and operators arrays of shape (2, 2),
both complex128; every function here is pure.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NonFinite

SIGMA1 = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA2 = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA3 = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)


@dataclass(frozen=True)
class PauliDecomp:
    """Coefficients of a 2x2 matrix in the basis (I, sigma1, sigma2, sigma3).

    Coefficients are complex on purpose: non-Hermitian matrices decompose
    with complex entries (the PT Hamiltonian carries an imaginary sigma3
    component).
    """

    c0: complex
    cx: complex
    cy: complex
    cz: complex


def pauli_compose(d: PauliDecomp) -> np.ndarray:
    """Assemble c0*I + cx*sigma1 + cy*sigma2 + cz*sigma3."""
    return (
        d.c0 * np.eye(2, dtype=complex)
        + d.cx * SIGMA1
        + d.cy * SIGMA2
        + d.cz * SIGMA3
    )


def pauli_decompose(m: np.ndarray) -> PauliDecomp:
    """Project a 2x2 matrix onto the Pauli basis; inverse of pauli_compose."""
    return PauliDecomp(
        c0=complex(m[0, 0] + m[1, 1]) / 2,
        cx=complex(m[0, 1] + m[1, 0]) / 2,
        cy=1j * complex(m[0, 1] - m[1, 0]) / 2,
        cz=complex(m[0, 0] - m[1, 1]) / 2,
    )


def mat_exp_oracle(m: np.ndarray, tol: float = 1e-14) -> np.ndarray:
    """Matrix exponential by scaling-and-squaring over a truncated series.

    Ground truth for checking the closed-form propagators; not a production
    path.  The input is halved until its largest entry magnitude is <= 0.5
    (which bounds the series terms by 1/k!), terms are accumulated until one
    drops below ``tol``, and the result is squared back up.
    """
    if tol <= 0:
        raise DomainError("tol must be positive")
    a = np.array(m, dtype=complex)
    if not np.all(np.isfinite(a)):
        raise NonFinite("cannot exponentiate a matrix with NaN/Inf entries")
    squarings = 0
    while np.abs(a).max() > 0.5:
        a = a / 2.0
        squarings += 1
    total = np.eye(2, dtype=complex)
    term = np.eye(2, dtype=complex)
    k = 0
    while np.abs(term).max() >= tol:
        k += 1
        term = term @ a / k
        total = total + term
    with np.errstate(over="ignore", invalid="ignore"):
        for _ in range(squarings):
            total = total @ total
    if not np.all(np.isfinite(total)):
        raise NonFinite("matrix exponential overflowed")
    return total
