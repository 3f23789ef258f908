"""Inequality and closed-form checks over seeded function batches.

Every check reduces to a worst slack: for an inequality LHS <= RHS the
slack is RHS - LHS (negative means violation), and for an equality the
slack is minus the relative discrepancy.  A check passes when its worst
slack stays above minus its tolerance.  All sampling is seeded, sample
order is fixed, and reductions run in a fixed order, so a repeated run
reproduces every result bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .functionals import (
    beckner_constant,
    conjugate_exponent,
    eval_Fq,
    fq_gc_lower_bound,
    gc_l2_norm_sq,
    interpolation_exponent,
)
from .functionals import _check_exponent  # shared public-exponent cap
from .gaussian import (
    ChirpParams,
    GaussianMixture,
    TwoScaleParams,
    closed_form_Fq_chirp,
    fourier_transform,
    make_two_scale,
)
from .hermite import HermiteExpansion, TestFunctionSpec, random_schwartz
from .numerics import lq_norm_quad

# Quadrature tolerance used inside verification checks; one-sided
# inequality slacks then only dip below zero by rounding, never by
# integration error.
QUAD_TOL = 1e-10


def _jsonable(value):
    """Coerce numpy scalars/arrays so reports serialize identically."""
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value)
    return value


@dataclass
class CheckResult:
    check_name: str
    parameters: dict
    samples: int
    worst_slack: float
    passed: bool
    seed: int | None
    observed: dict

    def to_json_dict(self) -> dict:
        return {
            "check_name": self.check_name,
            "parameters": _jsonable(self.parameters),
            "samples": int(self.samples),
            "worst_slack": float(self.worst_slack),
            "pass": bool(self.passed),
            "seed": self.seed,
            "observed": _jsonable(self.observed),
        }


def _sample_functions(samples: int, seed: int):
    """Half mixtures, half expansions, with child seeds drawn from one
    generator so the batch is a pure function of (samples, seed)."""
    rng = np.random.default_rng(seed)
    out = []
    for i in range(samples):
        child = int(rng.integers(0, 2 ** 63 - 1))
        if i % 2 == 0:
            size = int(rng.integers(1, 5))
            spec = TestFunctionSpec("gaussian-mixture", size, child)
        else:
            size = int(rng.integers(1, 9))
            spec = TestFunctionSpec("hermite", size, child)
        out.append(random_schwartz(spec))
    return out


def _ft(f):
    return f.ft() if isinstance(f, HermiteExpansion) else fourier_transform(f)


def _norm(f, q: float) -> float:
    return lq_norm_quad(f, q, QUAD_TOL).value


def verify_closed_forms(tol: float = 1e-8) -> CheckResult:
    """Chirp ratios and the two-scale L^2 identity against quadrature."""
    a_grid = (1.01, 1.1, 2.0, 10.0, 100.0)
    q_grid = (1.2, 1.5, 2.0, 3.0, 4.0, 8.0)
    worst = math.inf
    count = 0
    for a in a_grid:
        for q in q_grid:
            closed = closed_form_Fq_chirp(a, q)
            quad = eval_Fq(ChirpParams(a), q, "quadrature", QUAD_TOL).value
            worst = min(worst, -abs(closed - quad) / closed)
            count += 1
    for c in (0.1, 1.0, 2.0, 10.0, 100.0):
        closed = gc_l2_norm_sq(c)
        quad = _norm(make_two_scale(TwoScaleParams(c)), 2.0) ** 2
        worst = min(worst, -abs(closed - quad) / closed)
        count += 1
    return CheckResult(
        "closed-forms",
        {"a_grid": list(a_grid), "q_grid": list(q_grid), "tol": tol},
        count,
        worst,
        worst >= -tol,
        None,
        {},
    )


def verify_fq_lower_bound(
    q: float, samples: int = 500, seed: int = 0, tol: float = 1e-7
) -> CheckResult:
    """min F_q over a seeded batch stays above 1 (and is recorded against
    the sharper floor 1/B_q); stated for 1 < q < 2."""
    _check_exponent(q)
    if not q < 2.0:
        raise ValueError(f"lower-bound check is stated for q < 2, got {q}")
    floor = 1.0 / beckner_constant(q)
    vmin = math.inf
    for f in _sample_functions(samples, seed):
        vmin = min(vmin, eval_Fq(f, q, "quadrature", QUAD_TOL).value)
    return CheckResult(
        "fq-lower",
        {"q": q, "tol": tol},
        samples,
        vmin - 1.0,
        (vmin - 1.0) >= -tol,
        seed,
        {"min_value": vmin, "beckner_floor": floor, "beckner_slack": vmin - floor},
    )


def verify_hausdorff_young(
    q: float, samples: int = 200, seed: int = 0, tol: float = 1e-9
) -> CheckResult:
    """||fhat||_q' <= B_q * ||f||_q <= ||f||_q and its reflected twin on a
    seeded batch, 1 < q <= 2."""
    if not (1.0 < q <= 2.0):
        raise ValueError(f"Hausdorff-Young check needs 1 < q <= 2, got {q}")
    qc = conjugate_exponent(q)
    _check_exponent(q)
    _check_exponent(qc, "q'")
    sharp = beckner_constant(q)
    worst = math.inf
    worst_sharp = math.inf
    for f in _sample_functions(samples, seed):
        fhat = _ft(f)
        nf_q, nf_qc = _norm(f, q), _norm(f, qc)
        nh_q, nh_qc = _norm(fhat, q), _norm(fhat, qc)
        worst = min(worst, nf_q - nh_qc, nh_q - nf_qc)
        worst_sharp = min(worst_sharp, sharp * nf_q - nh_qc, sharp * nh_q - nf_qc)
    return CheckResult(
        "hausdorff-young",
        {"q": q, "q_conjugate": qc, "sharp_constant": sharp, "tol": tol},
        samples,
        min(worst, worst_sharp),
        min(worst, worst_sharp) >= -tol,
        seed,
        {"worst_plain_slack": worst, "worst_sharp_slack": worst_sharp},
    )


def verify_interpolation(
    q: float, p: float, samples: int = 200, seed: int = 0, tol: float = 1e-6
) -> CheckResult:
    """Holder interpolation ||f||_p <= ||f||_q**theta * ||f||_2**(1-theta)
    on f and fhat, plus its consequence
    F_qp >= F_q**((1/q-1/p)/(1/q-1/2)), for 1 < q < p < 2."""
    theta = interpolation_exponent(q, p)
    expo = (1.0 / q - 1.0 / p) / (1.0 / q - 0.5)
    worst = math.inf
    for f in _sample_functions(samples, seed):
        fhat = _ft(f)
        nf = {e: _norm(f, e) for e in (q, p, 2.0)}
        nh = {e: _norm(fhat, e) for e in (q, p, 2.0)}
        worst = min(
            worst,
            nf[q] ** theta * nf[2.0] ** (1.0 - theta) - nf[p],
            nh[q] ** theta * nh[2.0] ** (1.0 - theta) - nh[p],
        )
        f_q = nf[q] * nh[q] / (nf[2.0] * nh[2.0])
        f_qp = nf[q] * nh[q] / (nf[p] * nh[p])
        worst = min(worst, f_qp - f_q ** expo)
    return CheckResult(
        "interpolation",
        {"q": q, "p": p, "theta": theta, "consequence_exponent": expo, "tol": tol},
        samples,
        worst,
        worst >= -tol,
        seed,
        {},
    )


def verify_reduction_q_lt_2_le_p(
    q: float, p: float, samples: int = 200, seed: int = 0, tol: float = 1e-6
) -> CheckResult:
    """F_qp >= F_qp' when 1 < q < 2 <= p and 1/p + 1/q >= 1 (p' conjugate
    to p; the boundary q = p' degenerates to F_qp >= 1)."""
    _check_exponent(q)
    _check_exponent(p, "p")
    if not (q < 2.0 <= p):
        raise ValueError(f"need 1 < q < 2 <= p, got q={q}, p={p}")
    if 1.0 / p + 1.0 / q < 1.0 - 1e-12:
        raise ValueError(f"need 1/p + 1/q >= 1, got q={q}, p={p}")
    pc = conjugate_exponent(p)
    boundary = abs(pc - q) <= 1e-12
    worst = math.inf
    for f in _sample_functions(samples, seed):
        fhat = _ft(f)
        nf_q, nh_q = _norm(f, q), _norm(fhat, q)
        nf_p, nh_p = _norm(f, p), _norm(fhat, p)
        f_qp = nf_q * nh_q / (nf_p * nh_p)
        if boundary:
            rhs = 1.0
        else:
            nf_pc, nh_pc = _norm(f, pc), _norm(fhat, pc)
            rhs = nf_q * nh_q / (nf_pc * nh_pc)
        worst = min(worst, f_qp - rhs)
    return CheckResult(
        "reduction",
        {"q": q, "p": p, "p_conjugate": pc, "tol": tol},
        samples,
        worst,
        worst >= -tol,
        seed,
        {},
    )


def verify_asymptotics(
    q: float, p: float | None = None, c_grid=None, tol: float = 1e-9
) -> CheckResult:
    """Trend checks along the two-scale family.

    Without p (needs q > 2): F_q(g_c) strictly increases along the grid
    and dominates fq_gc_lower_bound everywhere.  With p (needs
    1/p + 1/q < 1): F_qp(g_c) strictly decreases and its log-log slope
    over the last four grid points matches the predicted decay rate
    within 0.05.
    """
    _check_exponent(q)
    if p is None:
        if not q > 2.0:
            raise ValueError(f"divergence trend is stated for q > 2, got {q}")
        grid = np.geomspace(10.0, 1e4, 9) if c_grid is None else np.asarray(c_grid, float)
        values = [
            eval_Fq(TwoScaleParams(c), q, "quadrature", QUAD_TOL).value for c in grid
        ]
        bounds = [float(fq_gc_lower_bound(float(c), q)) for c in grid]
        slacks = [v - b for v, b in zip(values, bounds)]
        slacks += [
            values[i + 1] - values[i]
            for i in range(len(grid) - 1)
            if grid[i] >= 10.0
        ]
        worst = min(slacks)
        return CheckResult(
            "asymptotics-divergence",
            {"q": q, "c_grid": [float(c) for c in grid], "tol": tol},
            len(grid),
            worst,
            worst >= -tol,
            None,
            {"values": values, "bounds": bounds},
        )
    _check_exponent(p, "p")
    if not (q < p and 1.0 / q + 1.0 / p < 1.0):
        raise ValueError(f"vanishing trend needs q < p and 1/q + 1/p < 1, got {q}, {p}")
    from .functionals import eval_Fqp

    grid = np.geomspace(10.0, 1e6, 9) if c_grid is None else np.asarray(c_grid, float)
    values = [
        eval_Fqp(TwoScaleParams(c), q, p, "quadrature", QUAD_TOL).value for c in grid
    ]
    target = 2.0 * (1.0 / q + 1.0 / p - 1.0) if q <= 2.0 else 2.0 * (1.0 / p - 1.0 / q)
    slope = float(
        np.polyfit(np.log(np.asarray(grid[-4:])), np.log(np.asarray(values[-4:])), 1)[0]
    )
    slacks = [
        values[i] - values[i + 1] for i in range(len(grid) - 1) if grid[i] >= 10.0
    ]
    slacks.append(0.05 - abs(slope - target))
    worst = min(slacks)
    return CheckResult(
        "asymptotics-vanishing",
        {"q": q, "p": p, "c_grid": [float(c) for c in grid], "tol": tol},
        len(grid),
        worst,
        worst >= -tol,
        None,
        {"values": values, "slope": slope, "slope_target": target},
    )


def verify_superadditivity(
    samples: int = 10_000, seed: int = 0, tol: float = 1e-9
) -> CheckResult:
    """Scalar triple inequalities behind the two-scale norm bounds:
    (a1+a2+a3)**s >= sum(a_i**s) for s >= 1, and the reverse with the
    factor max(1, 3**(s-1)) for every s > 0.  Slacks are relative."""
    rng = np.random.default_rng(seed)
    triples = rng.uniform(0.0, 10.0, size=(samples, 3))
    # Degenerate rows exercise the equality cases exactly.
    triples[0] = (1.0, 0.0, 0.0)
    triples[1] = (0.0, 0.0, 0.0)
    worst = math.inf
    s_values = (0.6, 1.0, 1.5, 3.0)
    for s in s_values:
        lhs = triples.sum(axis=1) ** s
        rhs = (triples ** s).sum(axis=1)
        scale = np.maximum(lhs, 1e-300)
        if s >= 1.0:
            worst = min(worst, float(((lhs - rhs) / scale).min()))
        factor = max(1.0, 3.0 ** (s - 1.0))
        scale = np.maximum(factor * rhs, 1e-300)
        worst = min(worst, float(((factor * rhs - lhs) / scale).min()))
    return CheckResult(
        "superadditivity",
        {"s_values": list(s_values), "tol": tol},
        samples,
        worst,
        worst >= -tol,
        seed,
        {},
    )


# Canonical suite: name -> zero-argument thunk factory taking the shared
# (seed, samples, q, p) overrides.  Names sort into the report order.
SUITE_NAMES = (
    "closed-forms",
    "fq-lower",
    "hy",
    "interp",
    "reduction",
    "asymptotics",
    "superadd",
)


def _suite_thunks(names, seed, samples, q, p):
    thunks = []
    for name in names:
        if name == "closed-forms":
            thunks.append(lambda: verify_closed_forms())
        elif name == "fq-lower":
            thunks.append(
                lambda: verify_fq_lower_bound(q or 1.5, samples or 500, seed)
            )
        elif name == "hy":
            thunks.append(
                lambda: verify_hausdorff_young(q or 4.0 / 3.0, samples or 200, seed)
            )
        elif name == "interp":
            thunks.append(
                lambda: verify_interpolation(q or 1.2, p or 1.5, samples or 200, seed)
            )
        elif name == "reduction":
            thunks.append(
                lambda: verify_reduction_q_lt_2_le_p(
                    q or 1.3, p or 3.0, samples or 200, seed
                )
            )
        elif name == "asymptotics":
            thunks.append(lambda: verify_asymptotics(q if (q and q > 2) else 4.0))
            thunks.append(lambda: verify_asymptotics(3.0, 6.0) if p is None else verify_asymptotics(q or 3.0, p))
        elif name == "superadd":
            thunks.append(lambda: verify_superadditivity(samples or 10_000, seed))
        else:
            raise ValueError(f"unknown check {name!r}")
    return thunks


def run_suite(
    names=SUITE_NAMES,
    seed: int = 0,
    samples: int | None = None,
    q: float | None = None,
    p: float | None = None,
    threads: int = 1,
) -> list[CheckResult]:
    """Run the named checks and return results sorted by check name.

    Checks are independent, so they may run on a thread pool; results
    are collected in submission order before the final sort, keeping the
    report identical for any thread count.
    """
    thunks = _suite_thunks(names, seed, samples, q, p)
    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda t: t(), thunks))
    else:
        results = [t() for t in thunks]
    return sorted(results, key=lambda r: r.check_name)
