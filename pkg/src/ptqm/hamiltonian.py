"""The PT-symmetric and Hermitian two-level Hamiltonian families.

The non-Hermitian family is

    H = [[r e^{i psi}, s], [s, r e^{-i psi}]],

which satisfies P conj(H) P = H and has real eigenvalues
eps_pm = r cos(psi) +- s cos(alpha) whenever s^2 > r^2 sin^2(psi), with the
mixing angle alpha defined by sin(alpha) = (r/s) sin(psi).  The Hermitian
comparison family is [[s, r e^{i psi}], [r e^{-i psi}, u]] with energy gap
omega' = sqrt((s-u)^2 + 4 r^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import BrokenPhase, DomainError, ExceptionalPoint

DEFAULT_PHASE_TOL = 1e-12
# cos(alpha) below this makes 1/sqrt(2 cos alpha) useless in double precision
COS_ALPHA_FLOOR = 1e-9


class PhaseClass(Enum):
    UNBROKEN = "unbroken"
    EXCEPTIONAL_POINT = "exceptional-point"
    BROKEN = "broken"


@dataclass(frozen=True)
class PTParams:
    """Parameters (r, s, psi) of the non-Hermitian family.

    Canonical form: r >= 0 and s > 0, with signs carried by
    psi in (-pi, pi].  This pins the branch of alpha.
    """

    r: float
    s: float
    psi: float

    def __post_init__(self):
        if not self.s > 0:
            raise DomainError(f"s must be positive, got {self.s}")
        if not self.r >= 0:
            raise DomainError(f"r must be non-negative, got {self.r}")
        if not -math.pi < self.psi <= math.pi:
            raise DomainError(f"psi must lie in (-pi, pi], got {self.psi}")


@dataclass(frozen=True)
class PTDerived:
    """Spectral data of one unbroken (or exceptional) parameter point."""

    alpha: float
    omega: float
    eps_plus: float
    eps_minus: float
    phase: PhaseClass


@dataclass(frozen=True)
class HermitianParams:
    """Parameters (s, u, r, psi) of the Hermitian comparison family."""

    s: float
    u: float
    r: float
    psi: float

    def __post_init__(self):
        if not self.r >= 0:
            raise DomainError(f"r must be non-negative, got {self.r}")


@dataclass(frozen=True)
class HermitianDerived:
    omega_prime: float


def build_pt_matrix(p: PTParams) -> np.ndarray:
    """[[r e^{i psi}, s], [s, r e^{-i psi}]]; P conj(H) P reproduces H exactly."""
    m00 = p.r * complex(math.cos(p.psi), math.sin(p.psi))
    return np.array([[m00, p.s], [p.s, m00.conjugate()]], dtype=complex)


def discriminant(p: PTParams) -> float:
    """s^2 - r^2 sin^2(psi); its sign decides the phase."""
    return p.s * p.s - (p.r * math.sin(p.psi)) ** 2


def classify_phase(p: PTParams, tol: float = DEFAULT_PHASE_TOL) -> PhaseClass:
    """Classify by the discriminant sign, with a band of width tol*s^2 around 0."""
    if not 0 < tol < 1e-3:
        raise DomainError(f"classification tol must lie in (0, 1e-3), got {tol}")
    disc = discriminant(p)
    band = tol * p.s * p.s
    if disc > band:
        return PhaseClass.UNBROKEN
    if abs(disc) <= band:
        return PhaseClass.EXCEPTIONAL_POINT
    return PhaseClass.BROKEN


def derive_pt(p: PTParams, tol: float = DEFAULT_PHASE_TOL) -> PTDerived:
    """Mixing angle, eigenvalues and gap of the non-Hermitian family.

    alpha = arcsin((r/s) sin psi) on the principal branch, so the Hermitian
    limit psi -> 0 gives alpha -> 0 continuously.  Broken-phase parameters
    are rejected (complex eigenvalues are out of scope).  Exceptional-point
    parameters pass through with alpha = +-pi/2 and omega = 0 so the
    degenerate spectrum can still be reported; operations that need
    1/cos(alpha) raise separately.
    """
    phase = classify_phase(p, tol)
    if phase is PhaseClass.BROKEN:
        raise BrokenPhase(
            "broken PT phase: discriminant s^2 - r^2 sin^2(psi) = "
            f"{discriminant(p):.6g} < 0"
        )
    sin_alpha = (p.r / p.s) * math.sin(p.psi)
    # inside the exceptional band roundoff may push |sin_alpha| past 1
    sin_alpha = max(-1.0, min(1.0, sin_alpha))
    alpha = math.asin(sin_alpha)
    half_gap = p.s * math.cos(alpha)
    base = p.r * math.cos(p.psi)
    return PTDerived(
        alpha=alpha,
        omega=2.0 * half_gap,
        eps_plus=base + half_gap,
        eps_minus=base - half_gap,
        phase=phase,
    )


def pt_eigenvectors_raw(d: PTDerived) -> tuple[np.ndarray, np.ndarray]:
    """Unnormalized eigenvectors (e^{ia/2}, e^{-ia/2}) and (i e^{-ia/2}, -i e^{ia/2}).

    The second component of the lower eigenvector is -i e^{+ia/2}; this is
    the sign/phase convention that actually satisfies H v = eps_minus v and
    carries PT norm -1 (some presentations print e^{-ia/2} there, which
    fails the eigenproblem for alpha != 0).
    """
    half = 0.5 * d.alpha
    up = complex(math.cos(half), math.sin(half))      # e^{+i alpha/2}
    down = up.conjugate()                             # e^{-i alpha/2}
    e_plus = np.array([up, down], dtype=complex)
    e_minus = np.array([1j * down, -1j * up], dtype=complex)
    return e_plus, e_minus


def pt_eigenvectors_normalized(
    d: PTDerived, floor: float = COS_ALPHA_FLOOR
) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvectors scaled by 1/sqrt(2 cos alpha) so their CPT norms are 1."""
    ca = math.cos(d.alpha)
    if ca <= floor:
        raise ExceptionalPoint(
            f"cos(alpha) = {ca:.3g} <= {floor:g}: "
            "normalization 1/sqrt(2 cos alpha) diverges"
        )
    scale = 1.0 / math.sqrt(2.0 * ca)
    e_plus, e_minus = pt_eigenvectors_raw(d)
    return scale * e_plus, scale * e_minus


def build_hermitian_matrix(p: HermitianParams) -> np.ndarray:
    """[[s, r e^{i psi}], [r e^{-i psi}, u]]; exactly equal to its adjoint."""
    m01 = p.r * complex(math.cos(p.psi), math.sin(p.psi))
    return np.array([[p.s, m01], [m01.conjugate(), p.u]], dtype=complex)


def derive_hermitian(p: HermitianParams) -> HermitianDerived:
    """Energy gap omega' = sqrt((s-u)^2 + 4 r^2)."""
    return HermitianDerived(omega_prime=math.hypot(p.s - p.u, 2.0 * p.r))


def pt_params_for_alpha(alpha: float, s: float = 1.0) -> PTParams:
    """A canonical parameter point realizing the requested mixing angle.

    Fixes r = s/2 and solves psi while |2 sin alpha| <= 1; otherwise pins
    psi = +-pi/2 and solves r = s |sin alpha|.  Together the two branches
    reach every alpha in (-pi/2, pi/2) inside the unbroken phase.
    """
    if not -math.pi / 2 < alpha < math.pi / 2:
        raise DomainError(f"alpha must lie in (-pi/2, pi/2), got {alpha}")
    x = 2.0 * math.sin(alpha)
    if abs(x) <= 1.0:
        return PTParams(r=0.5 * s, s=s, psi=math.asin(x))
    return PTParams(r=s * abs(math.sin(alpha)), s=s, psi=math.copysign(math.pi / 2, alpha))
