"""Explicit (s,t)-uniform discs, their sphere recurrences and limits."""

from .analysis import (HyperbolaCurve, RatioSeries, area_series, avg_curvature_limit,
                       avg_curvature_series, hyperbola_curve, ratio_series)
from .errors import (CapExceededError, ContradictionError, EmptyRangeError, FlatCaseError,
                     InvalidParamsError, NonRealResultError, OddTError, RadiusOutOfRangeError,
                     StUniformError, TooSmallError, UnknownRenderKindError, UnsupportedError)
from .params import Center, Params, PRPair, Regime, derive_pr, validate_params
from .sequences import (ClosedForm, InitialTerms, Quantity, characteristic_roots, closed_form,
                        closed_form_coefficients, closed_form_eval, initial_terms, terms)
from .tiling import (CurvatureReport, Disc, SphereStats, Vertex, curvature_report, generate_disc,
                     picks_check, sphere_stats)

__version__ = "0.1.0"

__all__ = [
    "CapExceededError", "Center", "ClosedForm", "ContradictionError", "CurvatureReport", "Disc",
    "EmptyRangeError", "FlatCaseError", "HyperbolaCurve", "InitialTerms", "InvalidParamsError",
    "NonRealResultError", "OddTError", "PRPair", "Params", "Quantity", "RadiusOutOfRangeError",
    "RatioSeries", "Regime", "SphereStats", "StUniformError", "TooSmallError",
    "UnknownRenderKindError", "UnsupportedError", "Vertex", "area_series", "avg_curvature_limit",
    "avg_curvature_series", "characteristic_roots", "closed_form", "closed_form_coefficients",
    "closed_form_eval", "curvature_report", "derive_pr", "generate_disc", "hyperbola_curve",
    "initial_terms", "picks_check", "ratio_series", "sphere_stats", "terms", "validate_params",
]
