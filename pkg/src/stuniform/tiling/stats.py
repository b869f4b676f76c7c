"""Per-sphere counts, curvature and Pick's formula on a generated disc."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..errors import ContradictionError, RadiusOutOfRangeError
from .disc import S_KIND, T_KIND, Disc


@dataclass(frozen=True)
class SphereStats:
    n: int
    len_S: int
    count_V: int
    count_W: int
    count_E: int
    count_F: int
    area: int


@dataclass(frozen=True)
class CurvatureReport:
    n: int
    k_g: int
    K: int
    K_avg: float
    interior_vertices: int

    @property
    def K_avg_exact(self) -> Fraction:
        return Fraction(self.K, self.interior_vertices)


def _check_n(disc: Disc, n: int, lo: int) -> None:
    if not lo <= n <= disc.radius - 1:
        raise RadiusOutOfRangeError(
            f"n={n} outside [{lo}, {disc.radius - 1}] for a radius-{disc.radius} disc")


def band_triangle_count(disc: Disc, k: int) -> int:
    """Number of triangles the construction emits between layers ``k`` and ``k+1``."""
    if k == 0:
        return disc.layer_sizes[1]
    # one fan triangle per outer neighbour of each frontier vertex
    return int(disc.fan_sizes(k).sum())


def area(disc: Disc, n: int) -> int:
    return sum(band_triangle_count(disc, k) for k in range(n))


def sphere_stats(disc: Disc, n: int) -> SphereStats:
    """Exact counts on the sphere of radius ``n`` (``0 <= n <= radius - 1``)."""
    _check_n(disc, n, 0)
    if n == 0:
        return SphereStats(0, 0, 0, 0, 0, 0, 0)
    kinds = disc.kinds[n]
    # edges with both endpoints on layer n: consecutive pairs of the cycle
    a, b = kinds, np.roll(kinds, -1)
    len_S = len(a)
    mixed = int(np.count_nonzero(a != b))
    tt = int(np.count_nonzero((a == T_KIND) & (b == T_KIND)))
    if mixed + tt != len_S:
        raise ContradictionError(f"sphere {n} contains an edge between two s-vertices")
    n_s = int(np.count_nonzero(kinds == S_KIND))
    return SphereStats(n, len_S, n_s, len(kinds) - n_s, mixed, tt, area(disc, n))


def outer_degrees(disc: Disc, k: int) -> np.ndarray:
    """Number of layer-``k+1`` neighbours of each layer-``k`` vertex, counted from the next layer."""
    left, right = disc.parents(k + 1)
    size = disc.layer_sizes[k]
    shared = right != left
    return np.bincount(left, minlength=size) + np.bincount(right[shared], minlength=size)


def triangle_counts(disc: Disc, k: int) -> np.ndarray:
    """Triangle count chi(v) of each saturated layer-``k`` vertex (``k < radius``)."""
    if k == 0:
        return np.array([disc.layer_sizes[1]], dtype=np.int64)
    # inner side: down + 1 triangles; outer side: one more than the outer neighbours
    return disc.downs[k].astype(np.int64) + 1 + outer_degrees(disc, k) + 1


def curvature_report(disc: Disc, n: int) -> CurvatureReport:
    """Combinatorial Gauss-Bonnet terms for the disc bounded by sphere ``n``."""
    _check_n(disc, n, 1)
    k_g = int((2 - disc.downs[n].astype(np.int64)).sum())  # chi = down + 1 on the boundary
    K = 0
    interior = 0
    for k in range(n):
        chi = triangle_counts(disc, k)
        K += int((6 - chi).sum())
        interior += len(chi)
    return CurvatureReport(n, k_g, K, K / interior, interior)


def picks_check(disc: Disc, n: int) -> bool:
    """Area = 2 * interior vertices + boundary vertices - 2."""
    _check_n(disc, n, 1)
    interior = sum(disc.layer_sizes[:n])
    boundary = disc.layer_sizes[n]
    return area(disc, n) == 2 * interior + boundary - 2


def y_count(disc: Disc, k: int) -> int:
    """Vertices on layer ``k`` with two neighbours on layer ``k - 1``."""
    return int(np.count_nonzero(disc.downs[k] == 2))


def local_rule_violations(disc: Disc) -> int:
    """Triangles touching an interior vertex whose s-vertex count is not exactly one.

    Around a t-vertex with an even closed link, alternation is the same as
    every link edge joining an s- and a t-vertex, and neighbours of an
    s-vertex are t-vertices, so the kind rules reduce to this count.
    Works band by band on the kind arrays alone.
    """
    if disc.params.uniform and disc.params.t % 2:
        raise ValueError("discs with s = t odd carry no s/t labelling")
    bad = 0
    for k in range(disc.radius):
        inner, outer = disc.kinds[k], disc.kinds[k + 1]
        is_s_out = (outer == S_KIND).astype(np.int8)
        if k == 0:
            n_s = (inner[0] == S_KIND) + is_s_out + np.roll(is_s_out, -1)
            bad += int(np.count_nonzero(n_s != 1))
            continue
        counts = disc.fan_sizes(k) - 1
        is_s_in = (inner == S_KIND).astype(np.int8)
        # down triangles: (left parent of w_{j+1}, w_j, w_{j+1})
        parent = np.repeat(is_s_in, counts)
        n_s = np.roll(parent, -1) + is_s_out + np.roll(is_s_out, -1)
        bad += int(np.count_nonzero(n_s != 1))
        del parent, n_s
        # up triangles: (v_i, v_{i+1}, apex_i)
        apex = is_s_out[np.cumsum(counts) - 1]
        n_s = is_s_in + np.roll(is_s_in, -1) + apex
        bad += int(np.count_nonzero(n_s != 1))
    return bad


def degree_violations(disc: Disc) -> int:
    """Interior vertices whose triangle count differs from the degree of their kind."""
    bad = 0
    for k in range(disc.radius):
        target = disc.degree_of(disc.kinds[k])
        bad += int(np.count_nonzero(triangle_counts(disc, k) != target))
    return bad
