"""Pydantic request/response models for the HTTP endpoints.

Response field order matters: it fixes the CSV column order rendered by
the CLI client.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel

from ..brachistochrone import (
    DEFAULT_SWEEP_ALPHA_MAX,
    DEFAULT_SWEEP_ALPHA_MIN,
    DEFAULT_SWEEP_STEPS,
)
from ..hamiltonian import DEFAULT_PHASE_TOL


class ServiceInfo(BaseModel):
    name: str
    version: str


class SpectrumRequest(BaseModel):
    r: float
    s: float
    psi: float
    tol: float = DEFAULT_PHASE_TOL


class SpectrumResponse(BaseModel):
    alpha: float
    eps_plus: float
    eps_minus: float
    omega: float
    phase: str


class OperatorsRequest(SpectrumRequest):
    pass


class OperatorsResponse(BaseModel):
    p00_re: float
    p00_im: float
    p01_re: float
    p01_im: float
    p10_re: float
    p10_im: float
    p11_re: float
    p11_im: float
    c00_re: float
    c00_im: float
    c01_re: float
    c01_im: float
    c10_re: float
    c10_im: float
    c11_re: float
    c11_im: float
    alpha: float
    c_squared_residual: float
    ch_commutator_residual: float
    cpt_commutator_residual: float
    completeness_residual: float
    p_reconstruction_residual: float


class EvolveRequest(BaseModel):
    r: float
    s: float
    psi: float
    t_max: float
    steps: int = 101
    state: Literal["nu1", "nu2", "eps+", "eps-"] = "nu1"
    hbar: float = 1.0
    tol: float = 1e-12


class EvolveRow(BaseModel):
    time: float
    re0: float
    im0: float
    re1: float
    im1: float
    cpt_norm: float
    dirac_norm: float


class EvolveResponse(BaseModel):
    rows: list[EvolveRow]


class BrachistochroneRequest(BaseModel):
    r: float
    s: float
    psi: float
    hbar: float = 1.0
    tol: float = 1e-12


class BrachistochroneResponse(BaseModel):
    tau_star: float
    beta_pt: float
    omega: float
    b_matched: float
    t_hermitian: float
    beta_h: float
    tau_norm_pt: float
    tau_norm_h: float


class SweepRequest(BaseModel):
    alpha_min: float = DEFAULT_SWEEP_ALPHA_MIN
    alpha_max: float = DEFAULT_SWEEP_ALPHA_MAX
    steps: int = DEFAULT_SWEEP_STEPS
    s: float = 1.0
    hbar: float = 1.0
    tol: float = 1e-12


class SweepRowModel(BaseModel):
    alpha: float
    tau_star: float
    beta_pt: float
    omega: float
    b_matched: float
    t_hermitian: float
    beta_h: float
    tau_norm_pt: float
    tau_norm_h: float


class SweepResponse(BaseModel):
    rows: list[SweepRowModel]


class SelftestRequest(BaseModel):
    hbar: float = 1.0
    tol: float | None = None


class SelftestRow(BaseModel):
    check: str
    value: float
    threshold: float
    comparison: str
    passed: bool


class SelftestResponse(BaseModel):
    passed: bool
    rows: list[SelftestRow]
