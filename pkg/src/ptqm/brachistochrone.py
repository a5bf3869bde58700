"""Minimal transition times and angular distances for both theories.

Both families obey the same law between the normalized transition time and
the angular distance of the endpoint states,

    tau * gap / (2 hbar) = beta,

so at matched gap and matched distance the minimal times coincide.  The
apparently instantaneous transitions available as alpha -> -pi/2 connect
states whose CPT angular distance goes to zero, exactly as a Hermitian
transition between nearly parallel states does.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ExceptionalPoint
from .evolution import EvolutionConfig
from .hamiltonian import PhaseClass, PTDerived, PTParams, derive_pt, pt_params_for_alpha

DEFAULT_SWEEP_ALPHA_MIN = -math.pi / 2 + 0.01
DEFAULT_SWEEP_ALPHA_MAX = 0.0
DEFAULT_SWEEP_STEPS = 151


@dataclass(frozen=True)
class TransitionResult:
    """A transition time tau, the endpoint angular distance beta, the gap
    used, and tau_normalized = tau * omega / (2 hbar)."""

    tau: float
    beta: float
    omega: float
    tau_normalized: float


@dataclass(frozen=True)
class SweepRow:
    """One comparison point: PT minimal-time data next to the Hermitian pair
    at the same gap and the same angular distance (b = cos alpha)."""

    alpha: float
    tau_star: float
    beta_pt: float
    omega: float
    b_matched: float
    t_hermitian: float
    beta_h: float
    tau_norm_pt: float
    tau_norm_h: float


def _require_unbroken(d: PTDerived) -> None:
    if d.phase is not PhaseClass.UNBROKEN:
        raise ExceptionalPoint("transition times diverge at the exceptional point")


def pt_transition_times(
    p: PTParams, n_max: int, cfg: EvolutionConfig | None = None
) -> list[float]:
    """The arrival times 2 hbar (alpha + pi/2 + n pi)/omega for n = 0..n_max."""
    cfg = cfg or EvolutionConfig()
    if n_max < 0:
        raise DomainError(f"n_max must be >= 0, got {n_max}")
    d = derive_pt(p)
    _require_unbroken(d)
    return [
        2.0 * cfg.hbar * (d.alpha + math.pi / 2 + n * math.pi) / d.omega
        for n in range(n_max + 1)
    ]


def pt_tau_star(p: PTParams, cfg: EvolutionConfig | None = None) -> TransitionResult:
    """Minimal nu1 -> nu2 transition time hbar (2 alpha + pi)/omega.

    beta is the CPT angular distance arccos|sin alpha| between the
    CPT-normalized endpoints.  For alpha <= 0 the normalized time equals
    beta; for alpha > 0 it equals pi - beta (the flow reaches nu2 the long
    way around).
    """
    cfg = cfg or EvolutionConfig()
    d = derive_pt(p)
    _require_unbroken(d)
    tau = cfg.hbar * (2.0 * d.alpha + math.pi) / d.omega
    return TransitionResult(
        tau=tau,
        beta=math.acos(abs(math.sin(d.alpha))),
        omega=d.omega,
        tau_normalized=tau * d.omega / (2.0 * cfg.hbar),
    )


def hermitian_transition_time(
    omega_prime: float, b_target: float, cfg: EvolutionConfig | None = None
) -> TransitionResult:
    """(2 hbar / omega') arcsin(b) at the optimal coupling r = omega'/2.

    b is the final lower-component amplitude magnitude; the endpoint
    angular distance is beta = arcsin(b), so tau_normalized equals beta by
    construction and the orthogonal case b = 1 gives the bound pi hbar/omega'.
    """
    cfg = cfg or EvolutionConfig()
    if not omega_prime > 0:
        raise DomainError(f"omega_prime must be positive, got {omega_prime}")
    if not 0.0 <= b_target <= 1.0:
        raise DomainError(f"b_target must lie in [0, 1], got {b_target}")
    beta = math.asin(b_target)
    return TransitionResult(
        tau=2.0 * cfg.hbar * beta / omega_prime,
        beta=beta,
        omega=omega_prime,
        tau_normalized=beta,
    )


def matched_row(p: PTParams, cfg: EvolutionConfig | None = None) -> SweepRow:
    """PT minimal-time data and the Hermitian comparison at equal gap and
    equal angular separation (b = cos alpha)."""
    cfg = cfg or EvolutionConfig()
    d = derive_pt(p)
    _require_unbroken(d)
    pt = pt_tau_star(p, cfg)
    b = math.cos(d.alpha)
    herm = hermitian_transition_time(pt.omega, b, cfg)
    return SweepRow(
        alpha=d.alpha,
        tau_star=pt.tau,
        beta_pt=pt.beta,
        omega=pt.omega,
        b_matched=b,
        t_hermitian=herm.tau,
        beta_h=herm.beta,
        tau_norm_pt=pt.tau_normalized,
        tau_norm_h=herm.tau_normalized,
    )


def equivalence_sweep(
    alpha_min: float = DEFAULT_SWEEP_ALPHA_MIN,
    alpha_max: float = DEFAULT_SWEEP_ALPHA_MAX,
    steps: int = DEFAULT_SWEEP_STEPS,
    s: float = 1.0,
    cfg: EvolutionConfig | None = None,
) -> list[SweepRow]:
    """One matched comparison per alpha on a uniform grid in (-pi/2, 0].

    Every row satisfies tau_norm_pt = beta_pt, tau_norm_h = beta_h and
    beta_pt = beta_h: at matched gap and distance the two theories give
    identical times, both reducing to the pi hbar/omega bound at beta = pi/2.
    """
    cfg = cfg or EvolutionConfig()
    if not -math.pi / 2 < alpha_min <= alpha_max <= 0.0:
        raise DomainError(
            "sweep bounds must satisfy -pi/2 < alpha_min <= alpha_max <= 0, got "
            f"[{alpha_min}, {alpha_max}]"
        )
    if steps < 2:
        raise DomainError(f"steps must be >= 2, got {steps}")
    return [
        matched_row(pt_params_for_alpha(float(alpha), s=s), cfg)
        for alpha in np.linspace(alpha_min, alpha_max, steps)
    ]
