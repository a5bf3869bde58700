"""Dirac, PT and CPT pairings on two-component states.

Convention: the transformed first argument is transposed, without any
further conjugation, onto the second,

    p(u, v) = (op conj(u))^t v,

with op = I (Dirac), P (PT) or C P (CPT).  All three pairings are linear
in v and conjugate-linear in u.  With this convention <nu2|nu1>_CPT
evaluates to +i tan(alpha); treatments that print -i tan(alpha) differ
only in a sign convention, and every distance and time formula downstream
uses the magnitude |tan alpha|.
"""

from __future__ import annotations

import math
from enum import Enum

import numpy as np

from .errors import NotNormalized, ZeroOrNegativeNorm
from .symmetry_ops import OperatorSet


class PairingKind(Enum):
    DIRAC = "dirac"
    PT = "pt"
    CPT = "cpt"


def dirac_product(u: np.ndarray, v: np.ndarray) -> complex:
    """conj(u)^t v, the standard sesquilinear pairing."""
    return complex(np.vdot(u, v))


def pt_product(u: np.ndarray, v: np.ndarray, P: np.ndarray) -> complex:
    """(P conj(u))^t v; indefinite, the eigenstates carry norms +1 and -1."""
    return complex((P @ np.conjugate(u)) @ v)


def cpt_product(u: np.ndarray, v: np.ndarray, ops: OperatorSet) -> complex:
    """(C P conj(u))^t v; positive definite throughout the unbroken phase."""
    return complex((ops.C @ (ops.P @ np.conjugate(u))) @ v)


def cpt_normalize(v: np.ndarray, ops: OperatorSet) -> np.ndarray:
    """Scale v by a positive real factor to unit CPT norm (phase untouched)."""
    n = cpt_product(v, v, ops)
    if not n.real > 1e-12:
        raise ZeroOrNegativeNorm(
            f"CPT self-pairing {n.real:.3g} is not positive; cannot normalize"
        )
    return np.asarray(v, dtype=complex) / math.sqrt(n.real)


def _pairing(u, v, ops: OperatorSet, kind: PairingKind) -> complex:
    if kind is PairingKind.DIRAC:
        return dirac_product(u, v)
    if kind is PairingKind.PT:
        return pt_product(u, v, ops.P)
    return cpt_product(u, v, ops)


def angular_distance(
    u: np.ndarray,
    v: np.ndarray,
    ops: OperatorSet,
    kind: PairingKind = PairingKind.CPT,
) -> float:
    """arccos of the overlap magnitude, in [0, pi/2].

    Both inputs must be unit vectors under the chosen pairing; norms are
    compared in magnitude, so PT-norm -1 eigenstates count as unit.  The
    overlap is clamped to [0, 1] to absorb 1-ulp overshoot at beta = 0.
    """
    for w in (u, v):
        if abs(abs(_pairing(w, w, ops, kind)) - 1.0) > 1e-9:
            raise NotNormalized(
                f"angular distance requires unit norm under the {kind.value} pairing"
            )
    overlap = min(1.0, abs(_pairing(u, v, ops, kind)))
    return math.acos(overlap)
