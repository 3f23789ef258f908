"""Uncertainty ratios and the closed-form bounds attached to them.

The central quantity is the scale-invariant ratio

    F_q(f)   = ||f||_q * ||fhat||_q / (||f||_2 * ||fhat||_2),
    F_qp(f)  = ||f||_q * ||fhat||_q / (||f||_p * ||fhat||_p),

evaluated either from single-term closed forms (chirps and plain
Gaussians) or by the quadrature engine, with both routes cross-checked
when requested.  Alongside the evaluators live the elementary bounds
for the two-scale family g_c and the sharp Hausdorff-Young constant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import numerics
from .gaussian import (
    ChirpParams,
    ComplexGaussianTerm,
    GaussianMixture,
    TwoScaleParams,
    fourier_transform,
    make_chirp,
    make_two_scale,
    term_lq_norm,
)
from .hermite import HermiteExpansion
from .numerics import NormEstimate, lq_norm_quad

# Exponents accepted by the evaluators.  Closed forms stay finite well
# beyond this range, but quadrature conditioning does not, so the public
# surface is capped.
EXPONENT_MIN = 1.0 + 1e-3
EXPONENT_MAX = 64.0

_METHODS = ("closed-form", "quadrature", "both")


@dataclass(frozen=True)
class FunctionalReport:
    """One evaluated ratio: the four norms behind it, the value (always
    the exact product ratio of the reported norms), and the relative
    closed-form/quadrature discrepancy when both routes ran."""

    q: float
    p: float
    norms: tuple[NormEstimate, NormEstimate, NormEstimate, NormEstimate]
    value: float
    method: str
    discrepancy: float | None


@dataclass(frozen=True)
class BoundReport:
    """A closed-form bound value with its family parameter and the
    three-way exponent case it came from (q<2, q=2, q>2)."""

    c: float | None
    q: float
    p: float | None
    bound_value: float
    kind: str
    case_tag: str | None


def _check_exponent(value: float, name: str = "q"):
    if not (math.isfinite(value) and EXPONENT_MIN <= value <= EXPONENT_MAX):
        raise ValueError(
            f"{name} must lie in [{EXPONENT_MIN}, {EXPONENT_MAX}], got {value}"
        )


def conjugate_exponent(q: float) -> float:
    """q' with 1/q + 1/q' = 1; requires q > 1."""
    if not (math.isfinite(q) and q > 1.0):
        raise ValueError(f"conjugate exponent needs q > 1, got {q}")
    return q / (q - 1.0)


def beckner_constant(p: float) -> float:
    """Sharp ratio ||fhat||_p' / ||f||_p over L^p, 1 < p <= 2:
    (p**(1/p) / p'**(1/p'))**(1/2), attained by Gaussians."""
    if not (math.isfinite(p) and 1.0 < p <= 2.0):
        raise ValueError(f"sharp constant defined for 1 < p <= 2, got {p}")
    pc = conjugate_exponent(p)
    return math.sqrt(p ** (1.0 / p) / pc ** (1.0 / pc))


def interpolation_exponent(q: float, p: float) -> float:
    """theta with ||f||_p <= ||f||_q**theta * ||f||_2**(1-theta) for
    1 < q < p < 2, from Holder between L^q and L^2."""
    if not (1.0 < q < p < 2.0):
        raise ValueError(f"need 1 < q < p < 2, got q={q}, p={p}")
    return (1.0 / p - 0.5) / (1.0 / q - 0.5)


def gc_l2_norm_sq(c: float) -> float:
    """||g_c||_2**2 = sqrt(2) + 2c/sqrt(c**4+1); maximal (2*sqrt(2))
    at c = 1 and -> sqrt(2) at both ends."""
    TwoScaleParams(c)
    return math.sqrt(2.0) + 2.0 * c / math.sqrt(c ** 4 + 1.0)


def _gc_braced_sum(c: float, q: float) -> float:
    return (
        c ** (1.0 - 0.5 * q) + c ** (0.5 * q - 1.0)
        + 2.0 ** (0.5 * (q + 1.0)) * c / math.sqrt(c ** 4 + 1.0)
    ) / math.sqrt(q)


def gc_lq_lower_bound(c: float, q: float) -> float:
    """Termwise lower bound for ||g_c||_q**2, q > 2: the braced sum of
    the three componentwise integrals raised to 2/q."""
    TwoScaleParams(c)
    if not (math.isfinite(q) and q > 2.0):
        raise ValueError(f"lower bound stated for q > 2, got {q}")
    return _gc_braced_sum(c, q) ** (2.0 / q)


def gc_lq_lower_bound_weak(c: float, q: float) -> float:
    """Single-spike weakening (1/q)**(1/q) * c**(1-2/q) of the bound
    above; what the divergence rate of F_q(g_c) is read off from."""
    TwoScaleParams(c)
    if not (math.isfinite(q) and q > 2.0):
        raise ValueError(f"lower bound stated for q > 2, got {q}")
    return (1.0 / q) ** (1.0 / q) * c ** (1.0 - 2.0 / q)


def gc_lq_upper_bound(c: float, q: float) -> BoundReport:
    """Upper bound for ||g_c||_q**2 with the three-way exponent split:
    4 at q = 2, the braced sum to the 2/q for q < 2, and an extra
    3**(1-2/q) (triple superadditivity constant) for q > 2."""
    TwoScaleParams(c)
    if not (math.isfinite(q) and q > 1.0):
        raise ValueError(f"upper bound stated for q > 1, got {q}")
    if q == 2.0:
        return BoundReport(c, q, None, 4.0, "gc-upper", "q=2")
    braced = _gc_braced_sum(c, q)
    if q < 2.0:
        return BoundReport(c, q, None, braced ** (2.0 / q), "gc-upper", "q<2")
    factor = max(1.0, 3.0 ** (0.5 * q - 1.0)) ** (2.0 / q)
    return BoundReport(c, q, None, factor * braced ** (2.0 / q), "gc-upper", "q>2")


def fq_gc_lower_bound(c: float, q: float) -> float:
    """Divergent lower bound for F_q(g_c), q > 2:
    (1/q)**(1/q) * c**(1-2/q) / ||g_c||_2**2."""
    return gc_lq_lower_bound_weak(c, q) / gc_l2_norm_sq(c)


def _resolve(f):
    """Map any accepted input to (object, analytic transform, closed?)."""
    if isinstance(f, ChirpParams):
        mix = GaussianMixture((make_chirp(f),))
    elif isinstance(f, TwoScaleParams):
        mix = make_two_scale(f)
    elif isinstance(f, ComplexGaussianTerm):
        mix = GaussianMixture((f,))
    elif isinstance(f, GaussianMixture):
        mix = f
    elif isinstance(f, HermiteExpansion):
        if all(c == 0 for c in f.coefficients):
            raise ValueError("zero function has no uncertainty ratio")
        return f, f.ft(), False
    else:
        raise TypeError(f"cannot evaluate functionals of {type(f).__name__}")
    if mix.amp_abs_sum == 0.0:
        raise ValueError("zero function has no uncertainty ratio")
    return mix, fourier_transform(mix), len(mix.terms) == 1


def _closed_norms(mix, mix_hat, q, p):
    t, th = mix.terms[0], mix_hat.terms[0]
    return tuple(
        NormEstimate(term_lq_norm(term, e), "closed-form", 0.0, e)
        for term, e in ((t, q), (th, q), (t, p), (th, p))
    )


def _quad_norms(obj, obj_hat, q, p, tol):
    return (
        lq_norm_quad(obj, q, tol),
        lq_norm_quad(obj_hat, q, tol),
        lq_norm_quad(obj, p, tol),
        lq_norm_quad(obj_hat, p, tol),
    )


def _ratio(norms) -> float:
    return norms[0].value * norms[1].value / (norms[2].value * norms[3].value)


def _eval_ratio(f, q, p, method, tol) -> FunctionalReport:
    if method not in _METHODS:
        raise ValueError(f"method must be one of {_METHODS}, got {method!r}")
    obj, obj_hat, closed_ok = _resolve(f)
    if method in ("closed-form", "both") and not closed_ok:
        raise ValueError(
            "closed-form evaluation needs a single Gaussian/chirp term; "
            "use method='quadrature' for this input"
        )
    if method == "closed-form":
        norms = _closed_norms(obj, obj_hat, q, p)
        return FunctionalReport(q, p, norms, _ratio(norms), method, None)
    if method == "quadrature":
        norms = _quad_norms(obj, obj_hat, q, p, tol)
        return FunctionalReport(q, p, norms, _ratio(norms), method, None)
    closed = _closed_norms(obj, obj_hat, q, p)
    value = _ratio(closed)
    quad_value = _ratio(_quad_norms(obj, obj_hat, q, p, tol))
    return FunctionalReport(
        q, p, closed, value, "both", abs(value - quad_value) / value
    )


def eval_Fq(f, q: float, method: str = "quadrature", tol: float = 1e-10) -> FunctionalReport:
    """F_q(f) with the L^2 pair in the denominator.

    ``f`` may be chirp/two-scale parameters, a term, a mixture, or a
    Hermite expansion; ``method`` picks closed forms (single terms
    only), quadrature, or both with a recorded discrepancy.
    """
    _check_exponent(q)
    return _eval_ratio(f, q, 2.0, method, tol)


def eval_Fqp(
    f, q: float, p: float, method: str = "quadrature", tol: float = 1e-10
) -> FunctionalReport:
    """F_qp(f) with the L^p pair in the denominator; requires q < p."""
    _check_exponent(q)
    _check_exponent(p, "p")
    if not p > q:
        raise ValueError(f"need q < p, got q={q}, p={p}")
    return _eval_ratio(f, q, p, method, tol)


def bound_report(kind: str, c: float | None = None, q: float | None = None,
                 p: float | None = None) -> BoundReport:
    """Uniform record constructor for the named closed-form bounds."""
    if kind == "gc-l2":
        return BoundReport(c, 2.0, None, gc_l2_norm_sq(c), kind, None)
    if kind == "gc-lower":
        return BoundReport(c, q, None, gc_lq_lower_bound(c, q), kind, "q>2")
    if kind == "gc-upper":
        return gc_lq_upper_bound(c, q)
    if kind == "fq-gc-lower":
        return BoundReport(c, q, None, fq_gc_lower_bound(c, q), kind, "q>2")
    if kind == "beckner":
        return BoundReport(None, q, None, beckner_constant(q), kind, None)
    if kind == "interpolation-exponent":
        return BoundReport(None, q, p, interpolation_exponent(q, p), kind, None)
    raise ValueError(f"unknown bound kind {kind!r}")
