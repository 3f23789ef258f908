"""Numerical experiments with Fourier uncertainty ratios.

The package evaluates the scale-invariant ratios
F_q(f) = ||f||_q ||f^||_q / (||f||_2 ||f^||_2) and the two-exponent
variant F_qp on complex Gaussian mixtures and Hermite expansions, using
the unitary transform convention f^(xi) = integral f(x) e^{-2 pi i x xi} dx.
Closed forms exist for single Gaussian/chirp terms; everything else runs
through certified adaptive quadrature, with an FFT-based cross check.
"""

__version__ = "0.1.0"

from .gaussian import (
    MIN_CHIRP_MARGIN,
    ChirpParams,
    ComplexGaussianTerm,
    GaussianMixture,
    TwoScaleParams,
    closed_form_Fq_chirp,
    closed_form_Fqp_chirp,
    eval_mixture,
    fourier_transform,
    make_chirp,
    make_two_scale,
    mixture_l2_norm,
    term_lq_norm,
)
from .numerics import (
    NormEstimate,
    SampledFunction,
    ToleranceNotAchieved,
    dft_approx,
    integrate_adaptive,
    lq_norm_quad,
    norm_from_samples,
    sample,
    truncation_radius,
)
from .hermite import (
    N_MAX,
    HermiteExpansion,
    TestFunctionSpec,
    hermite_eval,
    hermite_ft_coeffs,
    random_schwartz,
)
from .functionals import (
    BoundReport,
    FunctionalReport,
    beckner_constant,
    bound_report,
    conjugate_exponent,
    eval_Fq,
    eval_Fqp,
    fq_gc_lower_bound,
    gc_l2_norm_sq,
    gc_lq_lower_bound,
    gc_lq_lower_bound_weak,
    gc_lq_upper_bound,
    interpolation_exponent,
)
from .verifier import (
    SUITE_NAMES,
    CheckResult,
    run_suite,
    verify_asymptotics,
    verify_closed_forms,
    verify_fq_lower_bound,
    verify_hausdorff_young,
    verify_interpolation,
    verify_reduction_q_lt_2_le_p,
    verify_superadditivity,
)
from .explore import (
    GridSpec,
    IntervalReport,
    MinimizeFamilySpec,
    MinimizeReport,
    OptimizerConfig,
    SweepResult,
    SweepRow,
    estimate_image_interval,
    minimize_Fq,
    sweep,
)
from .cli import main, run_cli

__all__ = [
    "__version__",
    "MIN_CHIRP_MARGIN",
    "ChirpParams",
    "ComplexGaussianTerm",
    "GaussianMixture",
    "TwoScaleParams",
    "closed_form_Fq_chirp",
    "closed_form_Fqp_chirp",
    "eval_mixture",
    "fourier_transform",
    "make_chirp",
    "make_two_scale",
    "mixture_l2_norm",
    "term_lq_norm",
    "NormEstimate",
    "SampledFunction",
    "ToleranceNotAchieved",
    "dft_approx",
    "integrate_adaptive",
    "lq_norm_quad",
    "norm_from_samples",
    "sample",
    "truncation_radius",
    "N_MAX",
    "HermiteExpansion",
    "TestFunctionSpec",
    "hermite_eval",
    "hermite_ft_coeffs",
    "random_schwartz",
    "BoundReport",
    "FunctionalReport",
    "beckner_constant",
    "bound_report",
    "conjugate_exponent",
    "eval_Fq",
    "eval_Fqp",
    "fq_gc_lower_bound",
    "gc_l2_norm_sq",
    "gc_lq_lower_bound",
    "gc_lq_lower_bound_weak",
    "gc_lq_upper_bound",
    "interpolation_exponent",
    "SUITE_NAMES",
    "CheckResult",
    "run_suite",
    "verify_asymptotics",
    "verify_closed_forms",
    "verify_fq_lower_bound",
    "verify_hausdorff_young",
    "verify_interpolation",
    "verify_reduction_q_lt_2_le_p",
    "verify_superadditivity",
    "GridSpec",
    "IntervalReport",
    "MinimizeFamilySpec",
    "MinimizeReport",
    "OptimizerConfig",
    "SweepResult",
    "SweepRow",
    "estimate_image_interval",
    "minimize_Fq",
    "sweep",
    "main",
    "run_cli",
]
