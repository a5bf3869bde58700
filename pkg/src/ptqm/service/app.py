"""HTTP facade over the core package: one endpoint per analysis.

All endpoints are stateless and deterministic.  Domain failures (broken
phase, exceptional point, out-of-range arguments) come back as HTTP 400
with a machine-readable error slug.
"""

from __future__ import annotations

import dataclasses

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..brachistochrone import equivalence_sweep, matched_row
from ..errors import (
    BrokenPhase,
    DomainError,
    ExceptionalPoint,
    NonFinite,
    NotNormalized,
    ZeroOrNegativeNorm,
)
from ..evolution import EvolutionConfig, initial_state, trace_evolution
from ..hamiltonian import PTParams, derive_pt
from ..selftest import all_passed, run_selftest
from ..symmetry_ops import build_operator_set
from .models import (
    BrachistochroneRequest,
    BrachistochroneResponse,
    EvolveRequest,
    EvolveResponse,
    EvolveRow,
    OperatorsRequest,
    OperatorsResponse,
    SelftestRequest,
    SelftestResponse,
    SelftestRow,
    ServiceInfo,
    SpectrumRequest,
    SpectrumResponse,
    SweepRequest,
    SweepResponse,
    SweepRowModel,
)

ERROR_SLUGS = {
    BrokenPhase: "broken-phase",
    ExceptionalPoint: "exceptional-point",
    DomainError: "domain-error",
    ZeroOrNegativeNorm: "zero-or-negative-norm",
    NotNormalized: "not-normalized",
    NonFinite: "non-finite",
}


def _matrix_fields(prefix: str, m) -> dict[str, float]:
    out = {}
    for i in (0, 1):
        for j in (0, 1):
            out[f"{prefix}{i}{j}_re"] = float(m[i, j].real)
            out[f"{prefix}{i}{j}_im"] = float(m[i, j].imag)
    return out


def create_app() -> FastAPI:
    app = FastAPI(
        title="ptqm",
        version=__version__,
        description=(
            "Two-level PT-symmetric quantum mechanics: spectra, symmetry "
            "operators, CPT inner product, closed-form evolution and the "
            "transition-time/angular-distance analysis."
        ),
    )

    for exc_type, slug in ERROR_SLUGS.items():

        def handler(request: Request, exc: Exception, slug: str = slug) -> JSONResponse:
            return JSONResponse(
                status_code=400,
                content={"detail": {"error": slug, "message": str(exc)}},
            )

        app.add_exception_handler(exc_type, handler)

    @app.get("/", response_model=ServiceInfo)
    def info() -> ServiceInfo:
        return ServiceInfo(name="ptqm", version=__version__)

    @app.post("/spectrum", response_model=SpectrumResponse)
    def spectrum(req: SpectrumRequest) -> SpectrumResponse:
        d = derive_pt(PTParams(r=req.r, s=req.s, psi=req.psi), tol=req.tol)
        return SpectrumResponse(
            alpha=d.alpha,
            eps_plus=d.eps_plus,
            eps_minus=d.eps_minus,
            omega=d.omega,
            phase=d.phase.value,
        )

    @app.post("/operators", response_model=OperatorsResponse)
    def operators(req: OperatorsRequest) -> OperatorsResponse:
        ops = build_operator_set(PTParams(r=req.r, s=req.s, psi=req.psi), tol=req.tol)
        fields = _matrix_fields("p", ops.P) | _matrix_fields("c", ops.C)
        fields["alpha"] = ops.alpha
        fields.update(dataclasses.asdict(ops.residuals))
        return OperatorsResponse(**fields)

    @app.post("/evolve", response_model=EvolveResponse)
    def evolve(req: EvolveRequest) -> EvolveResponse:
        p = PTParams(r=req.r, s=req.s, psi=req.psi)
        cfg = EvolutionConfig(hbar=req.hbar, tol=req.tol)
        trace = trace_evolution(p, initial_state(req.state, p), req.t_max, req.steps, cfg)
        rows = [
            EvolveRow(
                time=float(t),
                re0=float(state[0].real),
                im0=float(state[0].imag),
                re1=float(state[1].real),
                im1=float(state[1].imag),
                cpt_norm=float(cpt),
                dirac_norm=float(dirac),
            )
            for t, state, cpt, dirac in zip(
                trace.times, trace.states, trace.cpt_norms, trace.dirac_norms
            )
        ]
        return EvolveResponse(rows=rows)

    @app.post("/brachistochrone", response_model=BrachistochroneResponse)
    def brachistochrone(req: BrachistochroneRequest) -> BrachistochroneResponse:
        cfg = EvolutionConfig(hbar=req.hbar, tol=req.tol)
        row = matched_row(PTParams(r=req.r, s=req.s, psi=req.psi), cfg)
        return BrachistochroneResponse(
            tau_star=row.tau_star,
            beta_pt=row.beta_pt,
            omega=row.omega,
            b_matched=row.b_matched,
            t_hermitian=row.t_hermitian,
            beta_h=row.beta_h,
            tau_norm_pt=row.tau_norm_pt,
            tau_norm_h=row.tau_norm_h,
        )

    @app.post("/sweep", response_model=SweepResponse)
    def sweep(req: SweepRequest) -> SweepResponse:
        cfg = EvolutionConfig(hbar=req.hbar, tol=req.tol)
        rows = equivalence_sweep(req.alpha_min, req.alpha_max, req.steps, req.s, cfg)
        return SweepResponse(rows=[SweepRowModel(**dataclasses.asdict(r)) for r in rows])

    @app.post("/selftest", response_model=SelftestResponse)
    def selftest(req: SelftestRequest) -> SelftestResponse:
        checks = run_selftest(hbar=req.hbar, tol=req.tol)
        return SelftestResponse(
            passed=all_passed(checks),
            rows=[SelftestRow(**dataclasses.asdict(c)) for c in checks],
        )

    return app
