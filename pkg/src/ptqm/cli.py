"""Command-line client for the analysis service.

Every command builds a request, sends it to the bundled FastAPI app (in
process by default, or to a remote instance via --server) and renders the
response as CSV or JSON.

Exit codes: 0 success, 1 usage error, 2 phase/domain error, 3 selftest
failure.
"""

from __future__ import annotations

import argparse
import asyncio
import csv
import io
import json
import math
import sys

import httpx

from .service import create_app

SWEEP_EQUIVALENCE_TOL = 1e-12
OPERATOR_RESIDUAL_BOUND = 1e-10

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_SELFTEST = 3


class _Parser(argparse.ArgumentParser):
    """argparse exits with code 2 on bad flags; the CLI contract wants 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="ptqm",
        description="Two-level PT-symmetric quantum mechanics toolkit.",
    )
    parser.add_argument("--hbar", type=float, default=1.0,
                        help="value of hbar in the chosen units (default 1)")
    parser.add_argument("--tol", type=float, default=None,
                        help="tolerance override; defaults are per operation "
                             "(phase classification 1e-12, selftest thresholds per check)")
    parser.add_argument("--format", choices=["csv", "json"], default="csv",
                        help="output format (default csv)")
    parser.add_argument("--output", metavar="PATH", default=None,
                        help="write output to PATH instead of standard output")
    parser.add_argument("--degrees", action="store_true",
                        help="interpret angle arguments (psi, alpha bounds) in degrees")
    parser.add_argument("--server", metavar="URL", default=None,
                        help="send requests to a running service instead of in process")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add_pt_args(sp):
        sp.add_argument("--r", type=float, required=True, help="diagonal magnitude r >= 0")
        sp.add_argument("--s", type=float, required=True, help="coupling s > 0")
        sp.add_argument("--psi", type=float, required=True, help="diagonal phase angle")

    sp = sub.add_parser("spectrum", help="mixing angle, eigenvalues, gap and phase class")
    add_pt_args(sp)

    sp = sub.add_parser("operators", help="P and C matrices with validation residuals")
    add_pt_args(sp)

    sp = sub.add_parser("evolve", help="trajectory samples with CPT and Dirac norms")
    add_pt_args(sp)
    sp.add_argument("--t-max", type=float, required=True, help="trace length (0 for a single row)")
    sp.add_argument("--steps", type=int, default=101, help="number of samples (default 101)")
    sp.add_argument("--state", choices=["nu1", "nu2", "eps+", "eps-"], default="nu1",
                    help="initial state (default nu1)")

    sp = sub.add_parser("brachistochrone",
                        help="minimal transition time and the matched Hermitian comparison")
    add_pt_args(sp)

    sp = sub.add_parser("sweep", help="alpha sweep of the time/distance equivalence")
    sp.add_argument("--alpha-min", type=float, default=None,
                    help="lower alpha bound (default -pi/2 + 0.01)")
    sp.add_argument("--alpha-max", type=float, default=0.0, help="upper alpha bound (default 0)")
    sp.add_argument("--steps", type=int, default=151, help="grid points (default 151)")
    sp.add_argument("--s", type=float, default=1.0, help="coupling scale (default 1)")

    sub.add_parser("selftest", help="run the full invariant grid and report pass/fail")

    sp = sub.add_parser("serve", help="run the HTTP service")
    sp.add_argument("--host", default="127.0.0.1")
    sp.add_argument("--port", type=int, default=8000)

    return parser


def _angle(value: float, degrees: bool) -> float:
    return math.radians(value) if degrees else value


def _build_request(args) -> tuple[str, dict]:
    if args.command in ("spectrum", "operators"):
        payload = {"r": args.r, "s": args.s, "psi": _angle(args.psi, args.degrees)}
        if args.tol is not None:
            payload["tol"] = args.tol
        return f"/{args.command}", payload
    if args.command == "evolve":
        payload = {
            "r": args.r, "s": args.s, "psi": _angle(args.psi, args.degrees),
            "t_max": args.t_max, "steps": args.steps, "state": args.state,
            "hbar": args.hbar,
        }
        if args.tol is not None:
            payload["tol"] = args.tol
        return "/evolve", payload
    if args.command == "brachistochrone":
        payload = {"r": args.r, "s": args.s, "psi": _angle(args.psi, args.degrees),
                   "hbar": args.hbar}
        if args.tol is not None:
            payload["tol"] = args.tol
        return "/brachistochrone", payload
    if args.command == "sweep":
        payload = {"alpha_max": _angle(args.alpha_max, args.degrees),
                   "steps": args.steps, "s": args.s, "hbar": args.hbar}
        if args.alpha_min is not None:
            payload["alpha_min"] = _angle(args.alpha_min, args.degrees)
        if args.tol is not None:
            payload["tol"] = args.tol
        return "/sweep", payload
    # selftest
    payload = {"hbar": args.hbar}
    if args.tol is not None:
        payload["tol"] = args.tol
    return "/selftest", payload


def _send(server: str | None, endpoint: str, payload: dict) -> httpx.Response:
    if server:
        with httpx.Client(base_url=server, timeout=120.0) as client:
            return client.post(endpoint, json=payload)

    async def _in_process():
        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(transport=transport, base_url="http://ptqm.internal") as client:
            return await client.post(endpoint, json=payload)

    return asyncio.run(_in_process())


def _format_cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def render_csv(rows: list[dict]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(rows[0].keys())
    for row in rows:
        writer.writerow([_format_cell(v) for v in row.values()])
    return buffer.getvalue()


def render_json(rows: list[dict]) -> str:
    return json.dumps(rows, indent=2) + "\n"


def _emit(args, rows: list[dict]) -> None:
    text = render_json(rows) if args.format == "json" else render_csv(rows)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _sweep_rows_ok(rows: list[dict]) -> bool:
    for row in rows:
        if (
            abs(row["tau_norm_pt"] - row["beta_pt"]) >= SWEEP_EQUIVALENCE_TOL
            or abs(row["tau_norm_h"] - row["beta_h"]) >= SWEEP_EQUIVALENCE_TOL
            or abs(row["beta_pt"] - row["beta_h"]) >= SWEEP_EQUIVALENCE_TOL
        ):
            return False
    return True


def _serve(args) -> int:
    import uvicorn

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return EXIT_OK


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    if args.command == "serve":
        return _serve(args)

    endpoint, payload = _build_request(args)
    try:
        response = _send(args.server, endpoint, payload)
    except httpx.HTTPError as exc:
        print(f"ptqm: transport error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN

    if response.status_code == 400:
        detail = response.json().get("detail", {})
        print(f"ptqm: {detail.get('message', 'request rejected')}", file=sys.stderr)
        return EXIT_DOMAIN
    if response.status_code == 422:
        print(f"ptqm: invalid request: {response.text}", file=sys.stderr)
        return EXIT_USAGE
    if response.status_code != 200:
        print(f"ptqm: service error {response.status_code}: {response.text}", file=sys.stderr)
        return EXIT_DOMAIN

    body = response.json()
    exit_code = EXIT_OK
    if args.command in ("spectrum", "brachistochrone"):
        rows = [body]
    elif args.command == "operators":
        rows = [body]
        residuals = [v for k, v in body.items() if k.endswith("_residual")]
        if max(residuals) >= OPERATOR_RESIDUAL_BOUND:
            print("ptqm: operator residuals exceed 1e-10", file=sys.stderr)
            exit_code = EXIT_DOMAIN
    elif args.command in ("evolve", "sweep"):
        rows = body["rows"]
        if args.command == "sweep" and not _sweep_rows_ok(rows):
            print("ptqm: sweep equivalence law violated beyond 1e-12", file=sys.stderr)
            exit_code = EXIT_DOMAIN
    else:  # selftest
        rows = body["rows"]
        if not body["passed"]:
            failing = next(r["check"] for r in rows if not r["passed"])
            print(f"ptqm: selftest failed: {failing}", file=sys.stderr)
            exit_code = EXIT_SELFTEST

    _emit(args, rows)
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
