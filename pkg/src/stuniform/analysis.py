"""Areas, area/length ratios, average curvature and the (S, T) hyperbolas.

All finite-n values are computed from exact integer sphere counts; only
the final division happens in floating point.  Limits depend on ``P``
alone, so pairs on one hyperbola ``T (S + P) = 2 P^2`` share them.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import accumulate

import numpy as np

from .errors import EmptyRangeError, FlatCaseError, UnsupportedError
from .params import Center, Params, derive_pr
from .sequences import Quantity, sum_ratio_limit, terms

#: Agreement required between the two algebraic forms of each limit.
FORM_TOL = 1e-12
RATIO_TOL = 1e-6


def _require_curved(params: Params) -> None:
    if params.is_flat:
        raise FlatCaseError("limits are undefined for the flat tiling s = t = 6")


def area_series(params: Params, center: Center | str | None = None, n_max: int = 10) -> list[int]:
    """Triangle counts ``A_0 .. A_{n_max}`` inside each sphere: ``2 sum_{k<=n} |S_k| - |S_n|``."""
    _require_curved(params)
    lengths = terms(params, Quantity.LEN_S, center, n_max)
    return [2 * c - x for c, x in zip(accumulate(lengths), lengths)]


def ratio_limit(params: Params) -> float:
    """``sqrt((P + 2) / (P - 2))``."""
    _require_curved(params)
    P = derive_pr(params).P
    return math.sqrt((P + 2) / (P - 2))


def ratio_limit_st(params: Params) -> float:
    """The same limit written directly in ``S`` and ``T``."""
    _require_curved(params)
    S, T = params.S, params.T
    root = math.sqrt(T * T + 8 * S * T)
    return math.sqrt((T + 8 + root) / (T - 8 + root))


@dataclass(frozen=True)
class RatioSeries:
    params: Params
    center: Center
    values: list[float]          # A_n / |S_n| for n = 1..n_max
    limit: float
    limit_st: float
    sum_ratio_limit: float       # limit of (|S_0| + ... + |S_n|) / |S_n|
    tolerance: float = RATIO_TOL

    @property
    def n_max(self) -> int:
        return len(self.values)

    def value(self, n: int) -> float:
        return self.values[n - 1]

    @property
    def residual(self) -> float:
        return abs(self.values[-1] - self.limit)

    @property
    def converged(self) -> bool:
        return self.residual <= self.tolerance


def ratio_series(params: Params, center: Center | str | None = None, n_max: int = 60,
                 tolerance: float = RATIO_TOL) -> RatioSeries:
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    _require_curved(params)
    center = params.center if center is None else Center.parse(center)
    lengths = terms(params, Quantity.LEN_S, center, n_max)
    areas = area_series(params, center, n_max)
    values = [float(Fraction(a, x)) for a, x in zip(areas[1:], lengths[1:])]
    lim, lim_st = ratio_limit(params), ratio_limit_st(params)
    if abs(lim - lim_st) > FORM_TOL * max(1.0, lim):
        raise ArithmeticError(f"ratio limit forms disagree: {lim!r} vs {lim_st!r}")
    P = derive_pr(params).P
    return RatioSeries(params, center, values, lim, lim_st, sum_ratio_limit(P), tolerance)


# -- average curvature ----------------------------------------------------------


def avg_curvature_exact(params: Params, n_max: int) -> list[Fraction]:
    """``K_avg`` of the discs bounded by spheres ``1..n_max`` around an s-vertex, as fractions."""
    _require_curved(params)
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if params.center is not Center.S_VERTEX:
        raise UnsupportedError("average curvature is provided for s-vertex centers only")
    if params.uniform:
        # every vertex has degree t, so every vertex contributes 6 - t
        return [Fraction(6 - params.t)] * n_max
    lengths = terms(params, Quantity.LEN_S, Center.S_VERTEX, n_max - 1)
    vs = terms(params, Quantity.COUNT_V, Center.S_VERTEX, n_max - 1)
    ws = terms(params, Quantity.COUNT_W, Center.S_VERTEX, n_max - 1)
    out = []
    for sl, sv, sw in zip(accumulate(lengths), accumulate(vs), accumulate(ws)):
        # the center is an s-vertex and counts as interior
        K = (6 - params.s) * (1 + sv) + (6 - params.t) * sw
        out.append(Fraction(K, 1 + sl))
    return out


def avg_curvature_series(params: Params, n_max: int) -> list[float]:
    """``K_avg(S_1) .. K_avg(S_{n_max})`` for spheres around an s-vertex."""
    return [float(k) for k in avg_curvature_exact(params, n_max)]


def avg_curvature_limit(params: Params) -> float:
    """``2 - P``; checked against the form written in ``S`` and ``T``."""
    _require_curved(params)
    P = derive_pr(params).P
    lim = 2 - P
    S, T = params.S, params.T
    lim_st = 2 - (T + math.sqrt(T * T + 8 * S * T)) / 4
    if abs(lim - lim_st) > FORM_TOL * max(1.0, abs(lim)):
        raise ArithmeticError(f"curvature limit forms disagree: {lim!r} vs {lim_st!r}")
    return lim


# -- hyperbolas -------------------------------------------------------------------


class Fixed(enum.Enum):
    P = "P"
    R = "R"


@dataclass(frozen=True)
class HyperbolaCurve:
    fixed: Fixed
    value: float
    samples: list[tuple[float, float]] = field(repr=False)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.samples, dtype=float).reshape(-1, 2)


def hyperbola_t(fixed: Fixed, value: float, S: np.ndarray | float) -> np.ndarray | float:
    """``T`` on the curve of constant ``P`` (or ``R``) at the given ``S``."""
    if fixed is Fixed.P:
        return 2 * value * value / (S + value)
    # eliminate P = R + T/2 from P R = S T / 2
    return 2 * value * value / (S - value)


def hyperbola_curve(fixed: Fixed | str, value: float, S_range: tuple[float, float] = (0.25, 40.0),
                    step: float = 0.25) -> HyperbolaCurve:
    """Sample the curve on ``S_range`` (inclusive) every ``step``."""
    fixed = Fixed(fixed)
    if fixed is Fixed.P and not value > 2:
        raise ValueError(f"P must exceed 2 (got {value})")
    if fixed is Fixed.R and not value > 1:
        raise ValueError(f"R must exceed 1 (got {value})")
    lo, hi = S_range
    if not step > 0:
        raise ValueError("step must be positive")
    if hi < lo or hi <= 0:
        raise EmptyRangeError(f"empty S range {S_range}")
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    S = lo + step * np.arange(count)
    S = S[S > 0] if fixed is Fixed.P else S[S > value]
    if S.size == 0:
        raise EmptyRangeError(f"no admissible S in {S_range} for fixed {fixed.value} = {value}")
    T = hyperbola_t(fixed, value, S)
    return HyperbolaCurve(fixed, float(value), [(float(a), float(b)) for a, b in zip(S, T)])


def lattice_points(P: int | Fraction, S_max: int = 200) -> list[tuple[int, int]]:
    """Integer ``(S, T)`` with ``T (S + P) = 2 P^2`` that name a tiling: ``S, T >= 2`` and ``T`` even or ``S = T``."""
    P = Fraction(P)
    out = []
    for S in range(2, S_max + 1):
        T = 2 * P * P / (S + P)
        if T.denominator == 1 and T >= 2 and (T % 2 == 0 or T == S):
            out.append((S, int(T)))
    return out
