"""Parameter validation and the (s, t) -> (P, R) algebra.

Sphere lengths obey an order-4 recurrence whose coefficients are
``T/2`` and ``S*T/2 - 2``.  Writing them as ``P - R`` and ``P*R - 2``
factors the characteristic polynomial into ``(x^2 - P x + 1)(x^2 + R x + 1)``;
``P`` controls growth and every limit, ``R`` only the oscillating part.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import FlatCaseError, OddTError, TooSmallError

#: Half-width of the band around R = 2 treated as the duplicate-root case.
REGIME_TOL = 1e-12


class Center(enum.Enum):
    S_VERTEX = "s"
    T_VERTEX = "t"

    @classmethod
    def parse(cls, value: "Center | str") -> "Center":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower()
        aliases = {"s": cls.S_VERTEX, "svertex": cls.S_VERTEX, "s_vertex": cls.S_VERTEX,
                   "t": cls.T_VERTEX, "tvertex": cls.T_VERTEX, "t_vertex": cls.T_VERTEX}
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown center kind {value!r}; expected 's' or 't'") from None


class Regime(enum.Enum):
    """Shape of the roots of ``x^2 + R x + 1``."""

    DISTINCT_REAL = "distinct real"   # R > 2
    DUPLICATE = "duplicate root"      # R = 2, c = d = -1
    COMPLEX = "complex roots"         # 1 < R < 2, |c| = |d| = 1


@dataclass(frozen=True)
class Params:
    s: int
    t: int
    center: Center = Center.S_VERTEX

    @property
    def S(self) -> int:
        return self.s - 4

    @property
    def T(self) -> int:
        return self.t - 4

    @property
    def is_flat(self) -> bool:
        return self.s == 6 and self.t == 6

    @property
    def uniform(self) -> bool:
        """True for s = t, where s- and t-vertices differ only by role."""
        return self.s == self.t

    def degree(self, is_t_kind: bool) -> int:
        return self.t if is_t_kind else self.s

    def with_center(self, center: "Center | str") -> "Params":
        return Params(self.s, self.t, Center.parse(center))


@dataclass(frozen=True)
class PRPair:
    P: float
    R: float
    regime: Regime

    @classmethod
    def from_values(cls, P: float, R: float) -> "PRPair":
        """Build a pair from raw reals, classifying by the R-vs-2 threshold."""
        if not P > 2:
            raise FlatCaseError(f"P must exceed 2 (got {P})")
        if not R > 1:
            raise ValueError(f"R must exceed 1 (got {R})")
        return cls(float(P), float(R), _classify_float(R))


def _classify_float(R: float) -> Regime:
    if abs(R - 2.0) <= REGIME_TOL:
        return Regime.DUPLICATE
    return Regime.DISTINCT_REAL if R > 2.0 else Regime.COMPLEX


def validate_params(s: int, t: int, center: "Center | str" = Center.S_VERTEX) -> Params:
    """Check that (s, t) is one of the two regimes with a unique tiling.

    >>> validate_params(8, 6).S, validate_params(8, 6).T
    (4, 2)
    """
    if isinstance(s, bool) or isinstance(t, bool) or int(s) != s or int(t) != t:
        raise TooSmallError(f"s and t must be integers (got {s!r}, {t!r})")
    s, t = int(s), int(t)
    if s < 6 or t < 6:
        raise TooSmallError(f"s and t must both be at least 6 (got s={s}, t={t})")
    if t % 2 and s != t:
        raise OddTError(f"t must be even unless s = t (got s={s}, t={t})")
    return Params(s, t, Center.parse(center))


def exact_p(params: Params) -> Fraction | None:
    """P as an exact rational when ``T^2 + 8ST`` is a perfect square."""
    S, T = params.S, params.T
    disc = T * T + 8 * S * T
    root = math.isqrt(disc)
    if root * root != disc:
        return None
    return Fraction(T + root, 4)


def derive_pr(params: Params) -> PRPair:
    """Solve ``P - R = T/2, P R = S T / 2`` for the root with P > 2."""
    if params.is_flat:
        raise FlatCaseError("s = t = 6 is the flat tiling: P = 2 and the limit formulas are singular")
    S, T = params.S, params.T
    if params.s == params.t:
        P = float(T)
    else:
        exact = exact_p(params)
        P = float(exact) if exact is not None else (T + math.sqrt(T * T + 8 * S * T)) / 4.0
    R = P - T / 2.0
    # R = 2  <=>  S*T = 2*T + 8, and P grows with S*T, so the sign is exact.
    key = S * T - (2 * T + 8)
    regime = Regime.DUPLICATE if key == 0 else (Regime.DISTINCT_REAL if key > 0 else Regime.COMPLEX)
    if regime is Regime.DUPLICATE:
        R = 2.0
    return PRPair(P, R, regime)
