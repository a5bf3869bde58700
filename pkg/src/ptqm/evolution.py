"""Closed-form time evolution for both Hamiltonian families.

Each family splits as H = c I + (gap/2) K with K^2 = I, so

    U(t) = e^{-i c t/hbar} [cos(gap t/2hbar) I - i sin(gap t/2hbar) K].

For the non-Hermitian family K coincides with the C operator, which is the
algebraic reason the CPT norm is conserved along the flow while the Dirac
norm oscillates whenever alpha != 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import PauliDecomp, pauli_compose
from .errors import DomainError, ExceptionalPoint
from .hamiltonian import (
    COS_ALPHA_FLOOR,
    HermitianParams,
    PTParams,
    derive_hermitian,
    derive_pt,
    pt_eigenvectors_normalized,
)
from .inner_product import cpt_product, dirac_product
from .symmetry_ops import build_operator_set, c_matrix_closed

# below this gap the Hermitian family is a multiple of the identity
DEGENERATE_GAP = 1e-14


@dataclass(frozen=True)
class EvolutionConfig:
    """hbar fixes the time unit; tol is the documented closeness of the
    closed forms to the series-exponential ground truth."""

    hbar: float = 1.0
    tol: float = 1e-12

    def __post_init__(self):
        if not self.hbar > 0:
            raise DomainError(f"hbar must be positive, got {self.hbar}")
        if not 0 < self.tol < 1e-6:
            raise DomainError(f"tol must lie in (0, 1e-6), got {self.tol}")


@dataclass
class EvolutionTrace:
    """Sampled trajectory with both self-pairings recorded at every sample."""

    times: np.ndarray
    states: list
    cpt_norms: np.ndarray
    dirac_norms: np.ndarray


def propagator_pt(p: PTParams, t: float, cfg: EvolutionConfig | None = None) -> np.ndarray:
    """e^{-i H t/hbar} for the non-Hermitian family, exact in closed form.

    The Pauli split of H has unit-square part equal to the C matrix, so
    U(t) = e^{-i r cos(psi) t/hbar} [cos(w t/2hbar) I - i sin(w t/2hbar) C].
    """
    cfg = cfg or EvolutionConfig()
    d = derive_pt(p)
    k = c_matrix_closed(d.alpha)
    theta = 0.5 * d.omega * t / cfg.hbar
    phase = np.exp(-1j * p.r * math.cos(p.psi) * t / cfg.hbar)
    return phase * (math.cos(theta) * np.eye(2) - 1j * math.sin(theta) * k)


def evolve_nu1_closed(p: PTParams, t: float, cfg: EvolutionConfig | None = None) -> np.ndarray:
    """The evolved basis state (1, 0):

        e^{-i r cos(psi) t/hbar} / cos(a) * (cos(w t/2hbar - a), -i sin(w t/2hbar)).
    """
    cfg = cfg or EvolutionConfig()
    d = derive_pt(p)
    ca = math.cos(d.alpha)
    if ca <= COS_ALPHA_FLOOR:
        raise ExceptionalPoint(f"cos(alpha) = {ca:.3g}: closed form diverges")
    theta = 0.5 * d.omega * t / cfg.hbar
    phase = np.exp(-1j * p.r * math.cos(p.psi) * t / cfg.hbar)
    return (phase / ca) * np.array(
        [math.cos(theta - d.alpha), -1j * math.sin(theta)], dtype=complex
    )


def propagator_hermitian(
    p: HermitianParams, t: float, cfg: EvolutionConfig | None = None
) -> np.ndarray:
    """e^{-i H t/hbar} for the Hermitian family; unitary by construction.

    Uses the split H = (s+u)/2 I + (w'/2) sigma.n with the unit vector
    n = (2/w')(r cos psi, -r sin psi, (s-u)/2).  A degenerate gap returns
    the pure scalar phase times the identity.
    """
    cfg = cfg or EvolutionConfig()
    w = derive_hermitian(p).omega_prime
    phase = np.exp(-1j * (p.s + p.u) * t / (2.0 * cfg.hbar))
    if w < DEGENERATE_GAP:
        return phase * np.eye(2)
    k = pauli_compose(
        PauliDecomp(
            c0=0.0,
            cx=2.0 * p.r * math.cos(p.psi) / w,
            cy=-2.0 * p.r * math.sin(p.psi) / w,
            cz=(p.s - p.u) / w,
        )
    )
    theta = 0.5 * w * t / cfg.hbar
    return phase * (math.cos(theta) * np.eye(2) - 1j * math.sin(theta) * k)


def initial_state(name: str, p: PTParams) -> np.ndarray:
    """Named initial states: the basis vectors or the CPT-normalized eigenvectors."""
    if name == "nu1":
        return np.array([1.0, 0.0], dtype=complex)
    if name == "nu2":
        return np.array([0.0, 1.0], dtype=complex)
    if name in ("eps+", "eps-"):
        e_plus, e_minus = pt_eigenvectors_normalized(derive_pt(p))
        return e_plus if name == "eps+" else e_minus
    raise DomainError(f"unknown state {name!r}; expected nu1, nu2, eps+ or eps-")


def trace_evolution(
    p: PTParams,
    state0: np.ndarray,
    t_max: float,
    steps: int,
    cfg: EvolutionConfig | None = None,
) -> EvolutionTrace:
    """Sample the trajectory of state0 on [0, t_max].

    Records the CPT and Dirac self-pairings at every sample; the first is
    constant along the flow, the second oscillates once alpha != 0.
    t_max = 0 produces the single initial sample.
    """
    cfg = cfg or EvolutionConfig()
    if steps < 2:
        raise DomainError(f"steps must be >= 2, got {steps}")
    if t_max < 0:
        raise DomainError(f"t_max must be >= 0, got {t_max}")
    ops = build_operator_set(p)
    state0 = np.asarray(state0, dtype=complex)
    times = np.array([0.0]) if t_max == 0 else np.linspace(0.0, t_max, steps)
    states = []
    cpt_norms = np.empty(len(times))
    dirac_norms = np.empty(len(times))
    for i, t in enumerate(times):
        state = propagator_pt(p, float(t), cfg) @ state0
        states.append(state)
        cpt_norms[i] = cpt_product(state, state, ops).real
        dirac_norms[i] = dirac_product(state, state).real
    return EvolutionTrace(
        times=times, states=states, cpt_norms=cpt_norms, dirac_norms=dirac_norms
    )
