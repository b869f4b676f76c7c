"""Layer-by-layer construction of the unique (s, t)-uniform disc.

The disc around the center is grown one sphere at a time.  A vertex ``v``
on the current frontier already has ``down + 1`` triangles on its inner
side (``down`` = number of neighbours one layer further in).  Closing its
link to the required degree needs ``m = deg(v) - 2 - down`` outer
neighbours; the first and last of them are shared with the frontier
neighbours of ``v`` (the apex over each frontier edge), the ``m - 2`` in
between are private to ``v``.  Since every degree is at least 6 and
``down <= 2``, ``m >= 2`` and all new vertices are fresh, so no
identification step is ever needed.

Each layer is stored as two int8 arrays (kind, down-degree) in cyclic
counterclockwise order.  Everything else (parents, edges, triangles) is
a deterministic function of those arrays and is derived on demand, which
keeps discs with ~10^8 outer vertices within memory.

Layer ``k+1`` is ordered as::

    priv(v0)..., apex0, priv(v1)..., apex1, ..., apex_{N-1}

where ``apex_i`` sits over the edge ``(v_i, v_{i+1})``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from ..errors import CapExceededError, ContradictionError, OddTError, RadiusOutOfRangeError
from ..params import Center, Params

S_KIND = np.int8(0)
T_KIND = np.int8(1)

DEFAULT_MAX_RADIUS = 64
#: Refuse to build discs with more vertices than this unless overridden.
DEFAULT_MAX_VERTICES = 400_000_000

_CHUNK = 1 << 21


@dataclass(frozen=True)
class Vertex:
    id: int
    kind: str          # "S" or "T"
    layer: int
    down_degree: int   # 0 for the center

    @property
    def is_center(self) -> bool:
        return self.layer == 0


@dataclass(frozen=True, eq=False)
class Disc:
    """A disc of ``radius`` complete layers; layers ``< radius`` are saturated."""

    params: Params
    kinds: tuple[np.ndarray, ...]
    downs: tuple[np.ndarray, ...]
    _offsets: np.ndarray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        sizes = np.array([len(k) for k in self.kinds], dtype=np.int64)
        object.__setattr__(self, "_offsets", np.concatenate([[0], np.cumsum(sizes)]))

    @property
    def radius(self) -> int:
        return len(self.kinds) - 1

    @property
    def layer_sizes(self) -> list[int]:
        return [len(k) for k in self.kinds]

    @property
    def num_vertices(self) -> int:
        return int(self._offsets[-1])

    def offset(self, k: int) -> int:
        return int(self._offsets[k])

    def layer(self, k: int) -> np.ndarray:
        """Global vertex ids of layer ``k`` in cyclic order."""
        return np.arange(self._offsets[k], self._offsets[k + 1], dtype=np.int64)

    def degree_of(self, kinds: np.ndarray) -> np.ndarray:
        """Target degree for each entry of a kind array."""
        return np.where(kinds == T_KIND, self.params.t, self.params.s).astype(np.int64)

    def vertex(self, vid: int) -> Vertex:
        if not 0 <= vid < self.num_vertices:
            raise IndexError(vid)
        k = int(np.searchsorted(self._offsets, vid, side="right")) - 1
        local = vid - self.offset(k)
        kind = "T" if self.kinds[k][local] == T_KIND else "S"
        return Vertex(vid, kind, k, int(self.downs[k][local]))

    def iter_vertices(self) -> Iterator[Vertex]:
        for vid in range(self.num_vertices):
            yield self.vertex(vid)

    # -- derived structure ------------------------------------------------

    def fan_sizes(self, k: int) -> np.ndarray:
        """Outer neighbour count ``m`` of each layer-``k`` vertex (``k < radius``)."""
        if k == 0:
            return np.array([len(self.kinds[1])], dtype=np.int64)
        return self.degree_of(self.kinds[k]) - 2 - self.downs[k].astype(np.int64)

    def parents(self, k: int) -> tuple[np.ndarray, np.ndarray]:
        """Local indices in layer ``k-1`` of the left and right parent of each layer-``k`` vertex.

        Private vertices have equal left and right parents.
        """
        if k < 1 or k > self.radius:
            raise RadiusOutOfRangeError(f"layer {k} has no parents in a radius-{self.radius} disc")
        n_new = len(self.kinds[k])
        if k == 1:
            zero = np.zeros(n_new, dtype=np.int32)
            return zero, zero
        counts = self.fan_sizes(k - 1) - 1
        n_prev = len(counts)
        left = np.repeat(np.arange(n_prev, dtype=np.int32), counts)
        right = left.copy()
        ends = np.cumsum(counts) - 1
        right[ends] = (left[ends] + 1) % n_prev
        return left, right

    def band_triangles(self, k: int) -> np.ndarray:
        """Triangles between layers ``k`` and ``k+1`` as global ids, shape (n, 3)."""
        if k < 0 or k >= self.radius:
            raise RadiusOutOfRangeError(f"no band {k} in a radius-{self.radius} disc")
        n_new = len(self.kinds[k + 1])
        outer = self.layer(k + 1)
        nxt = np.roll(outer, -1)
        if k == 0:
            center = np.zeros(n_new, dtype=np.int64)
            return np.stack([center, outer, nxt], axis=1)
        inner = self.layer(k)
        left, right = self.parents(k + 1)
        # down triangles: edge (w_j, w_{j+1}) of the new layer plus the left parent of w_{j+1}
        down = np.stack([inner[np.roll(left, -1)], outer, nxt], axis=1)
        # up triangles: edge (v_i, v_{i+1}) of layer k plus its apex
        apex = outer[np.cumsum(self.fan_sizes(k) - 1) - 1]
        up = np.stack([inner, np.roll(inner, -1), apex], axis=1)
        return np.concatenate([down, up])

    def triangles(self, upto: int | None = None) -> np.ndarray:
        """All triangles with every vertex in layers ``<= upto`` (default: whole disc)."""
        upto = self.radius if upto is None else upto
        if upto < 1:
            return np.empty((0, 3), dtype=np.int64)
        return np.concatenate([self.band_triangles(k) for k in range(upto)])

    def edges(self, upto: int | None = None) -> np.ndarray:
        """All edges with both endpoints in layers ``<= upto``, shape (n, 2), ``u < v``."""
        upto = self.radius if upto is None else upto
        parts = []
        for k in range(1, upto + 1):
            ids = self.layer(k)
            parts.append(np.stack([ids, np.roll(ids, -1)], axis=1))
            left, right = self.parents(k)
            prev = self.layer(k - 1)
            parts.append(np.stack([prev[left], ids], axis=1))
            shared = right != left
            parts.append(np.stack([prev[right[shared]], ids[shared]], axis=1))
        if not parts:
            return np.empty((0, 2), dtype=np.int64)
        e = np.concatenate(parts)
        return np.sort(e, axis=1)


def _seed_layer(params: Params, uniform: bool) -> tuple[np.ndarray, np.ndarray]:
    if params.center is Center.S_VERTEX:
        kinds = np.full(params.s, T_KIND, dtype=np.int8)
    else:
        kinds = np.full(params.t, T_KIND, dtype=np.int8)
        if not uniform:
            kinds[1::2] = S_KIND
    return kinds, np.ones(len(kinds), dtype=np.int8)


def _grow(kind: np.ndarray, down: np.ndarray, s: int, t: int,
          uniform: bool) -> tuple[np.ndarray, np.ndarray]:
    """Emit the next layer from the current frontier."""
    n = len(kind)
    is_t = kind == T_KIND
    m = np.where(is_t, t, s).astype(np.int64) - 2 - down
    if m.min() < 2:
        bad = int(np.argmin(m))
        raise ContradictionError(f"frontier vertex {bad} needs only {m[bad]} outer neighbours")
    counts = m - 1
    total = int(counts.sum())

    if uniform:
        return np.full(total, T_KIND, dtype=np.int8), _block_downs(counts, total)

    prev_kind = np.roll(kind, 1)
    next_kind = np.roll(kind, -1)
    # link of a t-vertex reads v_{i-1}, x_1..x_m, v_{i+1}: x_j = kind(v_{i-1}) xor (j odd)
    apex_from_left = np.where(is_t, prev_kind ^ (m & 1).astype(np.int8), T_KIND)
    apex_from_right = np.where(next_kind == T_KIND, kind ^ np.int8(1), T_KIND)
    clash = np.flatnonzero(apex_from_left != apex_from_right)
    if clash.size:
        i = int(clash[0])
        raise ContradictionError(
            f"apex over frontier edge ({i}, {(i + 1) % n}) gets conflicting kinds from its two parents")

    out = np.empty(total, dtype=np.int8)
    starts = np.concatenate([[0], np.cumsum(counts)[:-1]])
    # process parents in chunks to bound temporaries on very large layers
    for lo in range(0, n, _CHUNK):
        hi = min(n, lo + _CHUNK)
        c = counts[lo:hi]
        a, b = int(starts[lo]), int(starts[hi - 1] + counts[hi - 1])
        local = np.arange(b - a, dtype=np.int64) - np.repeat(starts[lo:hi] - a, c)
        parity = (local & 1).astype(np.int8)  # j = local + 2 shares parity with local
        base = np.repeat(prev_kind[lo:hi], c)
        t_parent = np.repeat(is_t[lo:hi], c)
        out[a:b] = np.where(t_parent, base ^ parity, T_KIND)
    return out, _block_downs(counts, total)


def _block_downs(counts: np.ndarray, total: int) -> np.ndarray:
    downs = np.ones(total, dtype=np.int8)
    downs[np.cumsum(counts) - 1] = 2
    return downs


def generate_disc(params: Params, radius: int, *, max_radius: int = DEFAULT_MAX_RADIUS,
                  max_vertices: int = DEFAULT_MAX_VERTICES) -> Disc:
    """Grow the disc of the given radius around ``params.center``.

    For ``s = t`` odd every vertex has degree ``t`` and no s/t labelling
    exists; such discs are grown unlabelled (all non-center vertices
    carry kind T).
    """
    if params.t % 2 and params.s != params.t:
        raise OddTError(f"t must be even unless s = t (got s={params.s}, t={params.t})")
    if radius < 1:
        raise RadiusOutOfRangeError(f"radius must be at least 1 (got {radius})")
    if radius > max_radius:
        raise CapExceededError(f"radius {radius} exceeds the cap {max_radius}")
    uniform = params.s == params.t and params.t % 2 == 1

    center_kind = S_KIND if params.center is Center.S_VERTEX else T_KIND
    kinds = [np.array([center_kind], dtype=np.int8)]
    downs = [np.zeros(1, dtype=np.int8)]
    k1, d1 = _seed_layer(params, uniform)
    kinds.append(k1)
    downs.append(d1)
    total = 1 + len(k1)
    for _ in range(1, radius):
        # next layer size is known before allocating it
        nxt = int((np.where(kinds[-1] == T_KIND, params.t, params.s) - 3 - downs[-1]).sum())
        total += nxt
        if total > max_vertices:
            raise CapExceededError(
                f"disc would exceed {max_vertices} vertices at layer {len(kinds)}")
        k, d = _grow(kinds[-1], downs[-1], params.s, params.t, uniform)
        kinds.append(k)
        downs.append(d)
    return Disc(params, tuple(kinds), tuple(downs))
