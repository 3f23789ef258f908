"""Command-line front end.

Subcommands: eval (one functional value), sweep (CSV/JSON parameter
sweep), verify (inequality check suite), minimize (direct search for
small F_q), ftcheck (DFT vs analytic transform diagnostic).  Exit codes:
0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import __version__
from .explore import GridSpec, MinimizeFamilySpec, OptimizerConfig, minimize_Fq, sweep
from .functionals import eval_Fq, eval_Fqp
from .gaussian import (
    ChirpParams,
    ComplexGaussianTerm,
    GaussianMixture,
    TwoScaleParams,
    fourier_transform,
    make_chirp,
    make_two_scale,
)
from .numerics import ToleranceNotAchieved, dft_approx, sample, truncation_radius
from .verifier import SUITE_NAMES, run_suite

EVAL_SCHEMA = "uflab.eval/1"
VERIFY_SCHEMA = "uflab.verify/1"
MINIMIZE_SCHEMA = "uflab.minimize/1"
FTCHECK_SCHEMA = "uflab.ftcheck/1"

_METHOD_MAP = {"closed": "closed-form", "quad": "quadrature", "both": "both"}


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uflab",
        description="Numerical experiments with Fourier uncertainty ratios.",
    )
    parser.add_argument("--version", action="version", version=f"uflab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--q", type=float, default=None, help="exponent q")
        sp.add_argument("--p", type=float, default=None,
                        help="second exponent; switches to the two-exponent ratio")
        sp.add_argument("--tol", type=float, default=1e-8,
                        help="relative quadrature tolerance (default 1e-8)")
        sp.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
        sp.add_argument("--json", action="store_true", help="print JSON to stdout")
        sp.add_argument("--out", type=str, default=None, help="write output to this file")
        sp.add_argument("--threads", type=int, default=None,
                        help="worker threads; overrides UFLAB_THREADS (default 1)")

    sp = sub.add_parser("eval", help="evaluate one uncertainty ratio")
    common(sp)
    sp.add_argument("--family", choices=("chirp", "twoscale", "gaussian"), required=True)
    sp.add_argument("--a", type=float, default=None, help="chirp parameter, a > 1")
    sp.add_argument("--c", type=float, default=None,
                    help="twoscale scale c > 0, or gaussian width (default 1)")
    sp.add_argument("--method", choices=tuple(_METHOD_MAP), default="quad",
                    help="evaluation route (default quad)")

    sp = sub.add_parser("sweep", help="sweep a family parameter")
    common(sp)
    sp.add_argument("--family", choices=("chirp", "twoscale"), required=True)
    sp.add_argument("--grid", type=str, required=True,
                    help="start:stop:count[log|lin]; t for chirp, c for twoscale")

    sp = sub.add_parser("verify", help="run inequality checks")
    common(sp)
    sp.add_argument("--suite", choices=("all",) + SUITE_NAMES, default="all",
                    help="check name or 'all' (default all)")
    sp.add_argument("--samples", type=int, default=None,
                    help="random test functions per randomized check")

    sp = sub.add_parser("minimize", help="search for small F_q values")
    common(sp)
    sp.add_argument("--terms", type=int, default=2,
                    help="Gaussian terms in the mixture (default 2)")
    sp.add_argument("--restarts", type=int, default=8,
                    help="optimizer restarts (default 8)")
    sp.add_argument("--max-iter", type=int, default=200,
                    help="iterations per restart (default 200)")

    sp = sub.add_parser("ftcheck", help="compare DFT against the analytic transform")
    common(sp)
    sp.add_argument("--family", choices=("chirp", "twoscale", "gaussian"), required=True)
    sp.add_argument("--a", type=float, default=None, help="chirp parameter, a > 1")
    sp.add_argument("--c", type=float, default=None,
                    help="twoscale scale c > 0, or gaussian width (default 1)")
    sp.add_argument("--grid-n", type=int, default=4096,
                    help="sample count, power of two >= 16 (default 4096)")
    sp.add_argument("--dx", type=float, default=None,
                    help="grid spacing; chosen automatically when omitted")

    return parser


def _threads(args) -> int:
    if args.threads is not None:
        return max(int(args.threads), 1)
    return max(int(os.environ.get("UFLAB_THREADS", "1")), 1)


def _family_object(args):
    """Build the function named by --family/--a/--c along with the swept
    parameter value used in reports."""
    if args.family == "chirp":
        if args.a is None:
            raise ValueError("--family chirp needs --a")
        return GaussianMixture((make_chirp(ChirpParams(args.a)),)), args.a
    if args.family == "twoscale":
        if args.c is None:
            raise ValueError("--family twoscale needs --c")
        return make_two_scale(TwoScaleParams(args.c)), args.c
    width = 1.0 if args.c is None else args.c
    if width <= 0.0:
        raise ValueError(f"gaussian width must be positive, got {width}")
    return GaussianMixture((ComplexGaussianTerm(1.0, complex(width)),)), width


def _norm_dict(n) -> dict:
    return {
        "value": n.value,
        "method": n.method,
        "abs_error_estimate": n.abs_error_estimate,
        "q": n.q,
    }


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _json_text(obj: dict) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _cmd_eval(args) -> int:
    if args.q is None:
        raise ValueError("eval needs --q")
    obj, _ = _family_object(args)
    method = _METHOD_MAP[args.method]
    if args.p is None:
        report = eval_Fq(obj, args.q, method, args.tol)
    else:
        report = eval_Fqp(obj, args.q, args.p, method, args.tol)
    _emit(
        _json_text(
            {
                "schema": EVAL_SCHEMA,
                "family": args.family,
                "q": report.q,
                "p": report.p,
                "norms": [_norm_dict(n) for n in report.norms],
                "value": report.value,
                "method": report.method,
                "discrepancy": report.discrepancy,
            }
        ),
        args.out,
    )
    return 0


def _cmd_sweep(args) -> int:
    if args.q is None:
        raise ValueError("sweep needs --q")
    result = sweep(
        args.family,
        args.q,
        args.p,
        GridSpec.parse(args.grid),
        args.tol,
        threads=_threads(args),
    )
    if args.json:
        _emit(_json_text(result.to_json_dict()), args.out)
    else:
        _emit(result.csv_text(), args.out)
    return 0


def _cmd_verify(args) -> int:
    names = SUITE_NAMES if args.suite == "all" else (args.suite,)
    results = run_suite(
        names,
        seed=args.seed,
        samples=args.samples,
        q=args.q,
        p=args.p,
        threads=_threads(args),
    )
    all_pass = all(r.passed for r in results)
    _emit(
        _json_text(
            {
                "schema": VERIFY_SCHEMA,
                "suite": args.suite,
                "seed": args.seed,
                "checks": [r.to_json_dict() for r in results],
                "pass": all_pass,
            }
        ),
        args.out,
    )
    return 0 if all_pass else 1


def _cmd_minimize(args) -> int:
    if args.q is None:
        raise ValueError("minimize needs --q")
    report = minimize_Fq(
        args.q,
        MinimizeFamilySpec(terms=args.terms),
        OptimizerConfig(restarts=args.restarts, max_iter=args.max_iter, seed=args.seed),
    )
    _emit(
        _json_text(
            {
                "schema": MINIMIZE_SCHEMA,
                "q": report.q,
                "terms": report.terms,
                "best_value": report.best_value,
                "best_parameters": report.best_parameters,
                "iterations": report.iterations,
                "restarts": report.restarts,
                "converged": report.converged,
                "comparisons": report.comparisons,
            }
        ),
        args.out,
    )
    return 0


def _auto_dx(obj, obj_hat, n: int, tol: float) -> float:
    # Coverage wants n*dx >= 2R; aliasing wants dx <= 1/(2*Omega).  Take
    # the smaller of the two candidates so bandwidth is never violated.
    u = max(min(tol, 1e-10) * 1e-2, 1e-14)
    radius = 1.5 * truncation_radius(obj, 1.0, u)
    bandwidth = 1.5 * truncation_radius(obj_hat, 1.0, u)
    return min(1.0 / (2.0 * bandwidth), 2.0 * radius / n)


def _cmd_ftcheck(args) -> int:
    n = args.grid_n
    if n < 16 or n & (n - 1):
        raise ValueError(f"--grid-n must be a power of two >= 16, got {n}")
    obj, param = _family_object(args)
    obj_hat = fourier_transform(obj)
    dx = args.dx if args.dx is not None else _auto_dx(obj, obj_hat, n, args.tol)
    if dx <= 0.0:
        raise ValueError(f"--dx must be positive, got {dx}")
    approx = dft_approx(sample(obj, n, dx))
    exact = obj_hat.eval(approx.x_grid())
    max_err = float(np.max(np.abs(approx.samples - exact)))
    passed = max_err <= args.tol
    _emit(
        _json_text(
            {
                "schema": FTCHECK_SCHEMA,
                "family": args.family,
                "param": param,
                "n": n,
                "dx": dx,
                "max_abs_error": max_err,
                "tol": args.tol,
                "pass": passed,
            }
        ),
        args.out,
    )
    return 0 if passed else 1


_COMMANDS = {
    "eval": _cmd_eval,
    "sweep": _cmd_sweep,
    "verify": _cmd_verify,
    "minimize": _cmd_minimize,
    "ftcheck": _cmd_ftcheck,
}


def run_cli(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help/--version and 2 for usage errors
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except ValueError as exc:
        sys.stderr.write(parser.format_usage())
        sys.stderr.write(f"uflab: error: {exc}\n")
        return 2
    except ToleranceNotAchieved as exc:
        sys.stderr.write(f"uflab: tolerance not achieved: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
