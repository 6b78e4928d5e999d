"""Polynomial families from a three-parameter recurrence: exact
hyperbolicity certificates, a trigonometric parametrization of the zeros,
interval bounds, and counterexample search.

Numeric kernels run through a compiled extension when available, with a
pure-Python fallback selected automatically at import.
"""

from ._kernels import BACKEND
from .analysis import (
    CounterexampleRecord,
    DensityProfile,
    DominanceReport,
    HyperbolicityReport,
    certify,
    cubic_discriminant,
    density_profile,
    dominance_at,
    first_nonreal,
    imaginary_axis_check,
    reciprocal_dominance,
    zero_approach,
)
from .gn import BracketError, BracketSet, GnProblem, brackets, g_value, predicted_roots, solve
from .params import NormalizedParams, ScalingMap, lambda_bound, normalize, predict_hyperbolic
from .poly import (
    Polynomial,
    RootFindingError,
    all_roots,
    count_real_roots,
    squarefree_part,
)
from .recurrence import PolySequence, RecurrenceParams, generate, series_oracle, value_at_zero
from .theta import (
    MonotonicityReport,
    ThetaSample,
    VietaResidual,
    delta,
    monotonicity_scan,
    sample,
    t_roots,
    tau,
    theta_grid,
    vieta_residuals,
    z_of_theta,
    zeta_pair,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BracketError",
    "BracketSet",
    "CounterexampleRecord",
    "DensityProfile",
    "DominanceReport",
    "GnProblem",
    "HyperbolicityReport",
    "MonotonicityReport",
    "NormalizedParams",
    "PolySequence",
    "Polynomial",
    "RecurrenceParams",
    "RootFindingError",
    "ScalingMap",
    "ThetaSample",
    "VietaResidual",
    "__version__",
    "all_roots",
    "brackets",
    "certify",
    "count_real_roots",
    "cubic_discriminant",
    "delta",
    "density_profile",
    "dominance_at",
    "first_nonreal",
    "g_value",
    "generate",
    "imaginary_axis_check",
    "lambda_bound",
    "monotonicity_scan",
    "normalize",
    "predict_hyperbolic",
    "predicted_roots",
    "reciprocal_dominance",
    "sample",
    "series_oracle",
    "solve",
    "squarefree_part",
    "t_roots",
    "tau",
    "theta_grid",
    "value_at_zero",
    "vieta_residuals",
    "z_of_theta",
    "zero_approach",
    "zeta_pair",
]
