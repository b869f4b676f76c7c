"""Exact recurrence terms and their real closed forms.

Every per-sphere count satisfies

    x_n = (T/2) x_{n-1} + (S T/2 - 2) x_{n-2} + (T/2) x_{n-3} - x_{n-4}

with seeds depending on the quantity and the kind of center.  Terms are
computed with Python integers.  The closed form
``A a^n + B b^n + C c^n + D d^n`` (or ``... + (C + n D) c^n`` when
``c = d = -1``) is evaluated in floating point and used only as a check
against the integers.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, replace
from fractions import Fraction

from .errors import FlatCaseError, NonRealResultError, UnsupportedError
from .params import Center, Params, PRPair, Regime, derive_pr

#: Relative size of the imaginary residue tolerated by :func:`closed_form_eval`.
IMAG_TOL = 1e-6


class Quantity(enum.Enum):
    LEN_S = "len_S"      # edges on the sphere
    COUNT_V = "count_V"  # s-vertices
    COUNT_W = "count_W"  # t-vertices
    COUNT_E = "count_E"  # (s,t)-edges
    COUNT_F = "count_F"  # (t,t)-edges


@dataclass(frozen=True)
class InitialTerms:
    quantity: Quantity
    center: Center
    x_minus1: int
    x0: int
    x1: int
    x2: int
    x3: int
    scale: int
    v1: int
    v2: int

    @property
    def seeds(self) -> tuple[int, int, int, int]:
        """``x_{-1}, x_0, x_1, x_2``: enough to run the order-4 recurrence from n = 3."""
        return self.x_minus1, self.x0, self.x1, self.x2


def _normalized_rows(params: Params, center: Center) -> dict[Quantity, tuple[Fraction, ...]]:
    """``(x_{-1}, x_0, x_1, x_2, x_3)`` divided by the scale factor."""
    S, T = Fraction(params.S), Fraction(params.T)
    h = T / 2
    q = S * T / 2 - 2
    if center is Center.S_VERTEX:
        return {
            Quantity.LEN_S: (-1, 0, 1, T, 2 * h * h + q + 1),
            Quantity.COUNT_V: (0, 0, 0, h, h * h),
            Quantity.COUNT_W: (-1, 0, 1, h, h * h + q + 1),
            Quantity.COUNT_E: (0, 0, 0, T, 2 * h * h),
            Quantity.COUNT_F: (-1, 0, 1, 0, q + 1),
        }
    return {
        Quantity.LEN_S: (-2, 0, 2, S + T, 2 * h * h + 3 * q + 4),
        Quantity.COUNT_V: (-1, 0, 1, h, h * h + q + 1),
        Quantity.COUNT_W: (-1, 0, 1, S + h, h * h + 2 * q + 3),
        Quantity.COUNT_E: (-2, 0, 2, T, 2 * h * h + 2 * q + 2),
        Quantity.COUNT_F: (0, 0, 0, S, q + 2),
    }


def _scale(params: Params, center: Center) -> int:
    return params.s if center is Center.S_VERTEX else params.t // 2


def initial_terms(params: Params, quantity: Quantity, center: Center | str | None = None) -> InitialTerms:
    """Seeds of the recurrence for one quantity and center kind."""
    if params.is_flat:
        raise FlatCaseError("the flat tiling s = t = 6 has no hyperbolic recurrence")
    center = params.center if center is None else Center.parse(center)
    if params.t % 2 and params.s != params.t:
        raise UnsupportedError("t odd with s != t has no unique tiling")
    if params.t % 2:
        # s = t odd: only the sphere length is defined, all vertices play one role
        if quantity is not Quantity.LEN_S:
            raise UnsupportedError(f"{quantity.value} needs an s/t labelling, which t = {params.t} odd lacks")
        center = Center.S_VERTEX
    row = _normalized_rows(params, center)[Quantity(quantity)]
    if any(Fraction(x).denominator != 1 for x in row):
        raise UnsupportedError(f"non-integer seeds for {quantity.value} at (s,t)=({params.s},{params.t})")
    k = _scale(params, center) if not params.t % 2 else params.s
    xm1, x0, x1, x2, x3 = (int(x) * k for x in row)
    return InitialTerms(Quantity(quantity), center, xm1, x0, x1, x2, x3, k, int(row[2]), int(row[3]))


def recurrence_coefficients(params: Params) -> tuple[int, int, int, int]:
    """Integer coefficients ``(T/2, ST/2 - 2, T/2, -1)``; requires t even."""
    if params.T % 2:
        raise UnsupportedError("the order-4 recurrence has integer coefficients only for t even")
    h = params.T // 2
    return h, params.S * h - 2, h, -1


def terms(params: Params, quantity: Quantity, center: Center | str | None = None,
          n_max: int = 10) -> list[int]:
    """Exact terms ``x_0 .. x_{n_max}`` of one per-sphere count."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    init = initial_terms(params, quantity, center)
    if params.T % 2:
        return _order2_terms(params.T, init.scale, n_max)
    c1, c2, c3, c4 = recurrence_coefficients(params)
    xs = list(init.seeds)
    while len(xs) < n_max + 2:
        xs.append(c1 * xs[-1] + c2 * xs[-2] + c3 * xs[-3] + c4 * xs[-4])
    return xs[1:n_max + 2]


def _order2_terms(P: int, scale: int, n_max: int) -> list[int]:
    # s = t: the order-4 recurrence is implied by x_n = P x_{n-1} - x_{n-2}, P = t - 4
    xs = [0, scale]
    while len(xs) < n_max + 1:
        xs.append(P * xs[-1] - xs[-2])
    return xs[:n_max + 1]


def order2_terms(params: Params, n_max: int) -> list[int]:
    """Sphere lengths around a vertex of a t-uniform complex (s = t)."""
    if params.s != params.t:
        raise UnsupportedError("the order-2 reduction applies only when s = t")
    if params.is_flat:
        raise FlatCaseError("the flat tiling has P = 2")
    return _order2_terms(params.T, params.s, n_max)


# -- closed form --------------------------------------------------------------


@dataclass(frozen=True)
class ClosedForm:
    a: float
    b: float
    c: complex
    d: complex
    regime: Regime
    A: complex | None = None
    B: complex | None = None
    C: complex | None = None
    D: complex | None = None
    scale: int = 1

    @property
    def has_coefficients(self) -> bool:
        return self.A is not None

    def __sub__(self, other: "ClosedForm") -> "ClosedForm":
        if (self.a, self.c, self.regime, self.scale) != (other.a, other.c, other.regime, other.scale):
            raise ValueError("closed forms with different roots or scale cannot be subtracted")
        return replace(self, A=self.A - other.A, B=self.B - other.B,
                       C=self.C - other.C, D=self.D - other.D)


def characteristic_roots(pr: PRPair) -> ClosedForm:
    """Roots of ``(x^2 - P x + 1)(x^2 + R x + 1)``."""
    P, R = pr.P, pr.R
    if not P > 2:
        raise FlatCaseError(f"P must exceed 2 (got {P})")
    sp = math.sqrt(P * P - 4)
    a, b = (P + sp) / 2, (P - sp) / 2
    if pr.regime is Regime.DUPLICATE:
        c = d = complex(-1.0)
    else:
        sr = cmath.sqrt(R * R - 4)
        c, d = (-R + sr) / 2, (-R - sr) / 2
    return ClosedForm(a, b, c, d, pr.regime)


def closed_form_coefficients(pr: PRPair, v1: int, v2: int, scale: int = 1) -> ClosedForm:
    """Coefficients fitting the seeds ``x_{-1}, x_0, x_1, x_2 = -v1, 0, v1, v2``."""
    if not ((v1 > 0 and v2 >= 0) or (v1 == 0 and v2 > 0)):
        raise ValueError(f"seeds (v1, v2) = ({v1}, {v2}) outside the admissible set")
    cf = characteristic_roots(pr)
    P, R = pr.P, pr.R
    sp = math.sqrt(P * P - 4)
    if pr.regime is Regime.DUPLICATE:
        A = (v2 + 2 * v1) / ((P + 2) * sp)
        C = 0.0
        D = -(P * v1 - v2) / (P + 2)
    else:
        A = (v2 + R * v1) / ((P + R) * sp)
        C = (P * v1 - v2) / ((P + R) * cmath.sqrt(R * R - 4))
        D = -C
    return replace(cf, A=complex(A), B=complex(-A), C=complex(C), D=complex(D), scale=scale)


def closed_form_eval(cf: ClosedForm, n: int) -> float:
    """Real value of the closed form at ``n``, scaled back to a count."""
    if not cf.has_coefficients:
        raise ValueError("closed form has no coefficients")
    if n < 0:
        raise ValueError("n must be non-negative")
    value = cf.A * cf.a ** n + cf.B * cf.b ** n
    if cf.regime is Regime.DUPLICATE:
        value += (cf.C + n * cf.D) * cf.c ** n
    else:
        value += cf.C * cf.c ** n + cf.D * cf.d ** n
    value *= cf.scale
    if abs(value.imag) > IMAG_TOL * max(1.0, abs(value.real)):
        raise NonRealResultError(f"imaginary residue {value.imag:g} at n={n}")
    return value.real


def closed_form(params: Params, quantity: Quantity, center: Center | str | None = None) -> ClosedForm:
    """Closed form of one per-sphere count; t-vertex counts come from lengths minus s-vertex counts."""
    pr = derive_pr(params)
    if quantity is Quantity.COUNT_W:
        return (closed_form(params, Quantity.LEN_S, center)
                - closed_form(params, Quantity.COUNT_V, center))
    init = initial_terms(params, quantity, center)
    return closed_form_coefficients(pr, init.v1, init.v2, init.scale)


def table_coefficients(pr: PRPair, quantity: Quantity) -> tuple[complex, complex, complex, complex]:
    """Closed expressions for the normalized s-centered length, s-vertex and t-vertex counts.

    Independent of :func:`closed_form_coefficients`; used to cross-check it.
    """
    P, R = pr.P, pr.R
    sp = math.sqrt(P * P - 4)
    if pr.regime is Regime.DUPLICATE:
        num_a, d = {
            Quantity.LEN_S: (2 * P - 2, -(4 - P) / (P + 2)),
            Quantity.COUNT_V: (P - 2, -(2 - P) / (P + 2)),
            Quantity.COUNT_W: (P, -2 / (P + 2)),
        }[quantity]
        A = num_a / ((P + 2) * sp)
        return complex(A), complex(-A), 0j, complex(d)
    num_a, num_c = {
        Quantity.LEN_S: (2 * P - R, 2 * R - P),
        Quantity.COUNT_V: (P - R, R - P),
        Quantity.COUNT_W: (P, R),
    }[quantity]
    A = num_a / ((P + R) * sp)
    C = num_c / ((P + R) * cmath.sqrt(R * R - 4))
    return complex(A), complex(-A), C, -C


def successive_ratio_limit(pr: PRPair) -> float:
    """Limit of ``x_n / x_{n-1}``: the dominant root ``a``."""
    return characteristic_roots(pr).a


def sum_ratio_limit(P: float) -> float:
    """Limit of ``(x_0 + ... + x_n) / x_n``."""
    if not P > 2:
        raise FlatCaseError(f"P must exceed 2 (got {P})")
    return (1 + math.sqrt((P + 2) / (P - 2))) / 2
