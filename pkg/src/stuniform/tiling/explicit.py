"""Brute-force checks on a materialized disc.

These functions ignore the layered bookkeeping and work from the flat
edge and triangle lists plus a breadth-first search, so they serve as an
independent oracle for :mod:`stuniform.tiling.stats`.  Memory grows with
the whole disc; keep radii moderate.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import shortest_path

from .disc import S_KIND, T_KIND, Disc


@dataclass(eq=False)
class ExplicitDisc:
    disc: Disc

    @cached_property
    def edges(self) -> np.ndarray:
        return self.disc.edges()

    @cached_property
    def triangles(self) -> np.ndarray:
        return self.disc.triangles()

    @cached_property
    def kinds(self) -> np.ndarray:
        return np.concatenate(self.disc.kinds)

    @cached_property
    def layers(self) -> np.ndarray:
        return np.repeat(np.arange(self.disc.radius + 1), self.disc.layer_sizes)

    @cached_property
    def distances(self) -> np.ndarray:
        """Graph distance from the center, by BFS over the edge list."""
        nv = self.disc.num_vertices
        e = self.edges
        adj = coo_matrix((np.ones(len(e), dtype=np.int8), (e[:, 0], e[:, 1])), shape=(nv, nv)).tocsr()
        d = shortest_path(adj, directed=False, unweighted=True, indices=0)
        return d.astype(np.int64)

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.bincount(self.edges.ravel(), minlength=self.disc.num_vertices)

    def triangles_within(self, n: int) -> np.ndarray:
        tri = self.triangles
        return tri[self.distances[tri].max(axis=1) <= n]

    def chi(self, n: int) -> np.ndarray:
        """Triangles of the disc bounded by sphere ``n`` containing each vertex."""
        return np.bincount(self.triangles_within(n).ravel(), minlength=self.disc.num_vertices)

    def sphere_counts(self, n: int) -> dict[str, int]:
        dist = self.distances
        e = self.edges
        on = e[(dist[e[:, 0]] == n) & (dist[e[:, 1]] == n)]
        ks = self.kinds[on]
        n_t = (ks == T_KIND).sum(axis=1)
        # only vertices spanning an edge on the sphere count (the center spans none)
        verts = np.unique(on)
        return {
            "len_S": len(on),
            "count_V": int(np.count_nonzero(self.kinds[verts] == S_KIND)),
            "count_W": int(np.count_nonzero(self.kinds[verts] == T_KIND)),
            "count_E": int(np.count_nonzero(n_t == 1)),
            "count_F": int(np.count_nonzero(n_t == 2)),
            "area": len(self.triangles_within(n)),
        }

    def curvature(self, n: int) -> tuple[int, int, int]:
        """``(k_g, K, interior vertex count)`` for the disc bounded by sphere ``n``."""
        chi = self.chi(n)
        dist = self.distances
        k_g = int((3 - chi[dist == n]).sum())
        inside = dist < n
        return k_g, int((6 - chi[inside]).sum()), int(np.count_nonzero(inside))

    def euler_characteristic(self, n: int) -> int:
        dist = self.distances
        v = int(np.count_nonzero(dist <= n))
        e = int(np.count_nonzero(dist[self.edges].max(axis=1) <= n))
        return v - e + len(self.triangles_within(n))

    def interior_ids(self) -> np.ndarray:
        return np.flatnonzero(self.distances < self.disc.radius)

    def degrees_match_kinds(self) -> bool:
        inner = self.interior_ids()
        target = np.where(self.kinds[inner] == T_KIND, self.disc.params.t, self.disc.params.s)
        chi_full = np.bincount(self.triangles.ravel(), minlength=self.disc.num_vertices)
        return bool(np.array_equal(self.degrees[inner], target)
                    and np.array_equal(chi_full[inner], target))

    def edge_triangle_incidence_ok(self) -> bool:
        """Interior edges lie on two triangles, boundary-cycle edges on one."""
        tri = self.triangles
        nv = self.disc.num_vertices
        te = np.sort(np.concatenate([tri[:, [0, 1]], tri[:, [1, 2]], tri[:, [0, 2]]]), axis=1)
        keys, counts = np.unique(te[:, 0] * nv + te[:, 1], return_counts=True)
        ekeys = np.sort(self.edges[:, 0] * nv + self.edges[:, 1])
        if not np.array_equal(keys, ekeys):
            return False
        r = self.disc.radius
        dist = self.distances
        on_boundary = (dist[keys // nv] == r) & (dist[keys % nv] == r)
        return bool(np.all(counts[on_boundary] == 1) and np.all(counts[~on_boundary] == 2))

    def local_rules_ok(self) -> bool:
        """Kind rules at every interior vertex, checked triangle by triangle.

        With a closed even-length link, alternation around a t-vertex is
        the same as every link edge joining an s- and a t-vertex; an
        s-vertex needs both other corners to be t-vertices.  Hence every
        triangle touching an interior vertex must carry exactly one s-vertex.
        """
        tri = self.triangles
        touches = (self.distances[tri] < self.disc.radius).any(axis=1)
        n_s = (self.kinds[tri[touches]] == S_KIND).sum(axis=1)
        return bool(np.all(n_s == 1))

    def link_cycle(self, v: int) -> list[int]:
        """Neighbours of an interior vertex read cyclically around it."""
        tri = self.triangles
        return link_cycle_from(tri[(tri == v).any(axis=1)], v)

    def link_alternates(self, v: int) -> bool:
        """Kind rule at one interior vertex, by walking its link."""
        cyc = self.link_cycle(v)
        ks = self.kinds[cyc]
        if self.kinds[v] == S_KIND:
            return bool(np.all(ks == T_KIND))
        return bool(np.all(ks != np.roll(ks, -1)))


def link_cycle_from(rows: np.ndarray, v: int) -> list[int]:
    """Order the link of ``v`` given the triangles containing it."""
    nbr: dict[int, list[int]] = {}
    for row in rows:
        a, b = (int(x) for x in row if x != v)
        nbr.setdefault(a, []).append(b)
        nbr.setdefault(b, []).append(a)
    if any(len(x) != 2 for x in nbr.values()):
        raise ValueError(f"link of vertex {v} is not a single cycle")
    start = min(nbr)
    cycle, prev, cur = [start], start, nbr[start][0]
    while cur != start:
        cycle.append(cur)
        a, b = nbr[cur]
        prev, cur = cur, (b if a == prev else a)
        if len(cycle) > len(nbr):
            raise ValueError(f"link of vertex {v} is not a single cycle")
    if len(cycle) != len(nbr):
        raise ValueError(f"link of vertex {v} is not a single cycle")
    return cycle
