"""Fourier eigenbasis and seeded random test functions.

The basis functions h_n(x) are the L^2-normalized Hermite functions in
the scaling that makes them eigenvectors of the transform used here:
h_n = kappa_n * H_n(sqrt(2*pi)*x) * exp(-pi*x**2) with
hat(h_n) = (-i)**n * h_n.  They are generated by the stable normalized
three-term recurrence; the normalization of each degree is fixed by
quadrature at first use instead of a hand-derived factorial constant,
and verified against ||h_n||_2 = 1 in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import numerics
from .gaussian import ComplexGaussianTerm, GaussianMixture, mixture_l2_norm

N_MAX = 32
_SQRT_2PI = math.sqrt(2.0 * math.pi)
# Uniform sup bound for the normalized basis: |h_n(x)| <= 2**0.25
# (attained by h_0 at the origin).  The extra factor 2 makes the
# envelope used for tail truncation safely conservative beyond the
# classical turning point.
_SUP_BOUND = 2.0 ** 0.25
_ENVELOPE_SAFETY = 2.0

_norm_cache: dict[int, float] = {}


def _raw_values(nmax: int, y: np.ndarray) -> np.ndarray:
    """Rows 0..nmax of the unnormalized recurrence, seeded with
    exp(-y**2/2) so no closed-form constant enters."""
    y = np.asarray(y, dtype=float)
    out = np.empty((nmax + 1,) + y.shape)
    out[0] = np.exp(-0.5 * y * y)
    if nmax >= 1:
        out[1] = math.sqrt(2.0) * y * out[0]
    for n in range(1, nmax):
        out[n + 1] = (
            math.sqrt(2.0 / (n + 1)) * y * out[n]
            - math.sqrt(n / (n + 1.0)) * out[n - 1]
        )
    return out


def _normalizer(n: int) -> float:
    """L^2 norm of the unnormalized degree-n function, by quadrature."""
    if n not in _norm_cache:
        radius = math.sqrt((2 * n + 1) / (2.0 * math.pi)) + 6.0

        def integrand(x):
            vals = _raw_values(n, _SQRT_2PI * np.asarray(x))[n]
            return vals * vals

        total, _err, converged, _ = numerics.integrate_adaptive(
            integrand, -radius, radius, 1e-12, np.linspace(-radius, radius, 33)
        )
        if not converged or total <= 0.0:
            raise RuntimeError(f"normalization quadrature failed for degree {n}")
        _norm_cache[n] = math.sqrt(total)
    return _norm_cache[n]


def hermite_eval(n: int, x):
    """Value(s) of the degree-n basis function at scalar or array x."""
    if not (isinstance(n, (int, np.integer)) and 0 <= n <= N_MAX):
        raise ValueError(f"degree must be an integer in [0, {N_MAX}], got {n}")
    y = _SQRT_2PI * np.asarray(x, dtype=float)
    return _raw_values(n, y)[n] / _normalizer(n)


def hermite_ft_coeffs(coefficients) -> tuple[complex, ...]:
    """Coefficients of the transform: c_n -> (-i)**n * c_n.

    The factors cycle through 1, -i, -1, i, so four applications
    reproduce the input exactly (sign flips and swaps only).
    """
    cycle = (1.0 + 0.0j, -1.0j, -1.0 + 0.0j, 1.0j)
    return tuple(cycle[n % 4] * complex(c) for n, c in enumerate(coefficients))


@dataclass(frozen=True)
class HermiteExpansion:
    """Finite expansion sum(c_n * h_n); degree at most N_MAX."""

    coefficients: tuple[complex, ...]

    def __post_init__(self):
        coeffs = tuple(complex(c) for c in self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        if not coeffs:
            raise ValueError("expansion needs at least one coefficient")
        if len(coeffs) - 1 > N_MAX:
            raise ValueError(f"degree {len(coeffs) - 1} exceeds cap {N_MAX}")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def eval(self, x):
        y = _SQRT_2PI * np.asarray(x, dtype=float)
        rows = _raw_values(self.degree, y)
        scaled = np.array(
            [c / _normalizer(n) for n, c in enumerate(self.coefficients)]
        )
        return np.tensordot(scaled, rows, axes=(0, 0))

    def ft(self) -> "HermiteExpansion":
        return HermiteExpansion(hermite_ft_coeffs(self.coefficients))

    def l2_norm(self) -> float:
        """Exact by orthonormality of the basis."""
        return math.sqrt(sum(abs(c) ** 2 for c in self.coefficients))

    def envelope(self):
        amp = _ENVELOPE_SAFETY * _SUP_BOUND * sum(abs(c) for c in self.coefficients)
        shift = math.sqrt((2 * self.degree + 1) / (2.0 * math.pi))
        return (amp, 1.0, shift)

    def scales(self):
        return (1.0,)


@dataclass(frozen=True)
class TestFunctionSpec:
    """Recipe for one seeded random test function.

    family 'gaussian-mixture': ``size`` terms with log-uniform real
    widths in ``scale_range``, amplitudes from the complex unit box, and
    (for half the terms on average) a chirp bounded by |Im z| <= 4 Re z
    so the transformed widths stay well off the imaginary axis.
    family 'hermite': degree ``size`` with unit-box complex
    coefficients.  Draws with ||f||_2 < 1e-6 are rejected and redrawn.
    """

    __test__ = False  # "Test" prefix is descriptive, not a pytest class

    family: str
    size: int
    seed: int
    scale_range: tuple[float, float] = (0.2, 5.0)

    def __post_init__(self):
        if self.family not in ("gaussian-mixture", "hermite"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.size < 1:
            raise ValueError(f"size must be >= 1, got {self.size}")
        if self.family == "hermite" and self.size > N_MAX:
            raise ValueError(f"hermite size capped at {N_MAX}, got {self.size}")
        lo, hi = self.scale_range
        if not (0.0 < lo <= hi and math.isfinite(hi)):
            raise ValueError(f"bad scale range {self.scale_range}")


L2_REJECT_FLOOR = 1e-6
_MAX_DRAWS = 1000


def random_schwartz(spec: TestFunctionSpec):
    """Deterministic draw for ``spec``; same spec, same function."""
    rng = np.random.default_rng(spec.seed)
    lo, hi = spec.scale_range
    for _ in range(_MAX_DRAWS):
        if spec.family == "gaussian-mixture":
            terms = []
            for _k in range(spec.size):
                w = math.exp(rng.uniform(math.log(lo), math.log(hi)))
                im = rng.uniform(-4.0 * w, 4.0 * w) if rng.random() < 0.5 else 0.0
                amp = complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0))
                terms.append(ComplexGaussianTerm(amp, complex(w, im)))
            f = GaussianMixture(tuple(terms))
            if mixture_l2_norm(f) >= L2_REJECT_FLOOR:
                return f
        else:
            coeffs = tuple(
                complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0))
                for _ in range(spec.size + 1)
            )
            f = HermiteExpansion(coeffs)
            if f.l2_norm() >= L2_REJECT_FLOOR:
                return f
    raise RuntimeError(f"rejection sampling failed for {spec}")
