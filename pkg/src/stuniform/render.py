"""SVG renderings: ring layout of a disc, the (S, T) hyperbolas, ratio convergence."""

from __future__ import annotations

import xml.etree.ElementTree as ET

import numpy as np

from .analysis import Fixed, hyperbola_curve, lattice_points, ratio_series
from .errors import UnknownRenderKindError
from .params import Params
from .tiling import S_KIND, Disc
from .tiling.explicit import link_cycle_from

SVG_NS = "http://www.w3.org/2000/svg"
RENDER_KINDS = ("disc", "hyperbolas", "ratio-convergence")

# fill colours for s-polygons, picked by s-vertex id
PALETTE = ["#f4a582", "#92c5de", "#b8e186", "#fdb863", "#c2a5cf", "#80cdc1", "#f1b6da", "#dfc27d"]


def _fmt(x: float) -> str:
    return f"{x:.3f}"


def _svg(width: float, height: float, title: str) -> ET.Element:
    root = ET.Element("svg", {
        "xmlns": SVG_NS, "version": "1.1",
        "width": _fmt(width), "height": _fmt(height),
        "viewBox": f"0 0 {_fmt(width)} {_fmt(height)}",
    })
    ET.SubElement(root, "title").text = title
    return root


def _to_text(root: ET.Element) -> str:
    ET.indent(root)
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(root, encoding="unicode") + "\n"


def ring_layout(disc: Disc, unit: float = 40.0) -> np.ndarray:
    """Layer ``k`` equally spaced on the circle of radius ``k * unit``; returns (n, 2) offsets."""
    pts = [np.zeros((1, 2))]
    for k in range(1, disc.radius + 1):
        n = disc.layer_sizes[k]
        ang = 2 * np.pi * np.arange(n) / n
        pts.append(k * unit * np.stack([np.cos(ang), -np.sin(ang)], axis=1))
    return np.concatenate(pts)


def render_disc(disc: Disc, unit: float = 40.0) -> str:
    margin = unit
    size = 2 * (disc.radius * unit + margin)
    c = size / 2
    xy = ring_layout(disc, unit) + c
    p = disc.params
    root = _svg(size, size, f"({p.s},{p.t}) disc around a {p.center.value}-vertex, radius {disc.radius}")

    tri = disc.triangles()
    kinds = np.concatenate(disc.kinds)
    interior = disc.offset(disc.radius)
    g = ET.SubElement(root, "g", {"class": "s-polygons"})
    labelled = not (p.uniform and p.t % 2)
    if labelled and len(tri):
        flat = tri.ravel()
        order = np.argsort(flat, kind="stable")
        starts = np.searchsorted(flat[order], np.arange(interior + 1))
        for v in np.flatnonzero(kinds[:interior] == S_KIND):
            rows = tri[order[starts[v]:starts[v + 1]] // 3]
            ring = link_cycle_from(rows, int(v))
            ET.SubElement(g, "polygon", {
                "class": "s-polygon", "data-center": str(int(v)),
                "points": " ".join(f"{_fmt(xy[u, 0])},{_fmt(xy[u, 1])}" for u in ring),
                "fill": PALETTE[int(v) % len(PALETTE)], "fill-opacity": "0.6", "stroke": "none",
            })

    ge = ET.SubElement(root, "g", {"class": "edges", "stroke": "#555", "stroke-width": "0.6"})
    for a, b in disc.edges():
        ET.SubElement(ge, "line", {"x1": _fmt(xy[a, 0]), "y1": _fmt(xy[a, 1]),
                                   "x2": _fmt(xy[b, 0]), "y2": _fmt(xy[b, 1])})

    gv = ET.SubElement(root, "g", {"class": "vertices"})
    for v in range(disc.num_vertices):
        kind = "s" if kinds[v] == S_KIND and labelled else "t"
        ET.SubElement(gv, "circle", {
            "class": f"vertex {kind}", "data-id": str(v),
            "cx": _fmt(xy[v, 0]), "cy": _fmt(xy[v, 1]), "r": "2.500",
            "fill": "#b2182b" if kind == "s" else "#2166ac",
        })
    return _to_text(root)


class _Axes:
    """Linear map from data coordinates to an SVG plot box."""

    def __init__(self, x_range, y_range, width=640.0, height=420.0, margin=50.0):
        self.x0, self.x1 = x_range
        self.y0, self.y1 = y_range
        self.w, self.h, self.m = width, height, margin

    def x(self, v: float) -> float:
        return self.m + (v - self.x0) / (self.x1 - self.x0) * (self.w - 2 * self.m)

    def y(self, v: float) -> float:
        return self.h - self.m - (v - self.y0) / (self.y1 - self.y0) * (self.h - 2 * self.m)

    def draw(self, root: ET.Element, x_label: str, y_label: str) -> None:
        g = ET.SubElement(root, "g", {"class": "axes", "stroke": "#000", "stroke-width": "1"})
        ET.SubElement(g, "line", {"x1": _fmt(self.x(self.x0)), "y1": _fmt(self.y(self.y0)),
                                  "x2": _fmt(self.x(self.x1)), "y2": _fmt(self.y(self.y0))})
        ET.SubElement(g, "line", {"x1": _fmt(self.x(self.x0)), "y1": _fmt(self.y(self.y0)),
                                  "x2": _fmt(self.x(self.x0)), "y2": _fmt(self.y(self.y1))})
        ET.SubElement(root, "text", {"x": _fmt(self.w / 2), "y": _fmt(self.h - 10),
                                     "text-anchor": "middle"}).text = x_label
        ET.SubElement(root, "text", {"x": "12", "y": _fmt(self.h / 2),
                                     "text-anchor": "middle"}).text = y_label

    def polyline(self, parent: ET.Element, pts, **attrs) -> ET.Element:
        points = " ".join(f"{_fmt(self.x(a))},{_fmt(self.y(b))}" for a, b in pts)
        return ET.SubElement(parent, "polyline", {"points": points, "fill": "none", **attrs})


def render_hyperbolas(P_values=(3, 4, 5, 6), S_max: float = 40.0, T_max: float = 12.0,
                      step: float = 0.25) -> str:
    """Curves of constant ``P`` in the (S, T) plane, with the integer tilings on them marked."""
    ax = _Axes((0.0, S_max), (0.0, T_max))
    root = _svg(ax.w, ax.h, "curves of constant P in the (S, T) plane")
    ax.draw(root, "S = s - 4", "T = t - 4")
    colors = ["#d7191c", "#1a9641", "#2b83ba", "#fdae61", "#7b3294", "#008837"]
    for i, P in enumerate(P_values):
        curve = hyperbola_curve(Fixed.P, P, (step, S_max), step)
        pts = [(a, b) for a, b in curve.samples if b <= T_max]
        ax.polyline(root, pts, **{"class": "fixed-P", "data-P": format(P, "g"),
                                  "stroke": colors[i % len(colors)], "stroke-width": "1.5"})
        for S, T in lattice_points(P, int(S_max)):
            ET.SubElement(root, "circle", {
                "class": "lattice", "data-P": format(P, "g"), "data-S": str(S), "data-T": str(T),
                "data-s": str(S + 4), "data-t": str(T + 4),
                "cx": _fmt(ax.x(S)), "cy": _fmt(ax.y(T)), "r": "3.5", "fill": colors[i % len(colors)],
            })
    # R = 2 separates distinct real from complex oscillating roots
    boundary = hyperbola_curve(Fixed.R, 2.0, (2.0 + step, S_max), step)
    ax.polyline(root, [(a, b) for a, b in boundary.samples if b <= T_max],
                **{"class": "fixed-R", "data-R": "2", "stroke": "#777", "stroke-dasharray": "4 3"})
    return _to_text(root)


def render_ratio_convergence(params: Params, n_max: int = 20) -> str:
    """``A_n / |S_n|`` against ``n`` with the limit as a horizontal line."""
    rs = ratio_series(params, params.center, n_max)
    lo = min(min(rs.values), rs.limit)
    hi = max(max(rs.values), rs.limit)
    pad = 0.05 * (hi - lo or 1.0)
    ax = _Axes((1.0, max(2.0, float(n_max))), (lo - pad, hi + pad))
    root = _svg(ax.w, ax.h, f"area over length around a {params.center.value}-vertex, ({params.s},{params.t})")
    ax.draw(root, "n", "A_n / |S_n|")
    ET.SubElement(root, "line", {
        "class": "limit", "data-value": repr(rs.limit),
        "x1": _fmt(ax.x(ax.x0)), "x2": _fmt(ax.x(ax.x1)),
        "y1": _fmt(ax.y(rs.limit)), "y2": _fmt(ax.y(rs.limit)),
        "stroke": "#d7191c", "stroke-dasharray": "5 3",
    })
    pts = list(zip(range(1, n_max + 1), rs.values))
    ax.polyline(root, pts, **{"class": "ratio", "stroke": "#2166ac", "stroke-width": "1.5"})
    for n, v in pts:
        ET.SubElement(root, "circle", {"class": "point", "data-n": str(n), "data-value": repr(v),
                                       "cx": _fmt(ax.x(n)), "cy": _fmt(ax.y(v)), "r": "2.5",
                                       "fill": "#2166ac"})
    return _to_text(root)


def check_kind(kind: str) -> str:
    if kind not in RENDER_KINDS:
        raise UnknownRenderKindError(f"unknown render kind {kind!r}; expected one of {', '.join(RENDER_KINDS)}")
    return kind
