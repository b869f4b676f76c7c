"""Run configuration and the CSV/JSON serializations."""

from __future__ import annotations

import csv
import enum
import io
import json
import sys
from dataclasses import asdict, dataclass, fields
from pathlib import Path

import numpy as np

from .params import Center, Params
from .tiling import Disc, T_KIND, curvature_report, sphere_stats

SCHEMA_VERSION = 1

LAYER_COLUMNS = ["n", "len_S", "count_V", "count_W", "count_E", "count_F", "area", "k_g", "K", "K_avg"]


class Command(enum.Enum):
    GENERATE = "generate"
    VERIFY = "verify"
    LIMITS = "limits"
    RENDER = "render"
    EXPORT = "export"


class Format(enum.Enum):
    CSV = "csv"
    JSON = "json"
    SVG = "svg"


@dataclass(frozen=True)
class RunConfig:
    command: Command
    s: int | None = None
    t: int | None = None
    center: Center = Center.S_VERTEX
    radius: int | None = None
    n_max: int | None = None
    output_path: str | None = None
    format: Format = Format.CSV
    render_kind: str | None = None
    pairs: tuple[tuple[int, int], ...] = ()
    max_radius: int | None = None

    @property
    def params(self) -> Params:
        return Params(self.s, self.t, self.center)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["command"] = self.command.value
        d["center"] = self.center.value
        d["format"] = self.format.value
        d["pairs"] = [list(p) for p in self.pairs]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "RunConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(d) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        d = dict(d)
        d["command"] = Command(d["command"])
        if "center" in d:
            d["center"] = Center.parse(d["center"])
        if "format" in d:
            d["format"] = Format(d["format"])
        d["pairs"] = tuple(tuple(p) for p in d.get("pairs", ()))
        return cls(**d)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "RunConfig":
        return cls.from_dict(json.loads(text))


def format_value(v) -> str:
    """Integers verbatim, reals with 12 significant digits."""
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return format(v, ".12g")
    return str(v)


def write_csv(columns: list[str], rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([format_value(row[c]) for c in columns])
    return buf.getvalue()


def layer_rows(disc: Disc) -> list[dict]:
    """One row per complete sphere ``n = 1 .. radius - 1``."""
    rows = []
    for n in range(1, disc.radius):
        st = sphere_stats(disc, n)
        cr = curvature_report(disc, n)
        rows.append({"n": n, "len_S": st.len_S, "count_V": st.count_V, "count_W": st.count_W,
                     "count_E": st.count_E, "count_F": st.count_F, "area": st.area,
                     "k_g": cr.k_g, "K": cr.K, "K_avg": cr.K_avg})
    return rows


def encode_disc(disc: Disc) -> dict:
    """Per-layer kinds and down-degrees as strings; parents and triangles follow from them."""
    return {
        "layer_sizes": disc.layer_sizes,
        "kinds": [np.where(k == T_KIND, ord("T"), ord("S")).astype(np.uint8).tobytes().decode()
                  for k in disc.kinds],
        "down_degrees": [(d.astype(np.uint8) + ord("0")).tobytes().decode() for d in disc.downs],
    }


def params_dict(params: Params) -> dict:
    return {"s": params.s, "t": params.t, "center": params.center.value}


def generate_json(disc: Disc, rows: list[dict]) -> str:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "params": params_dict(disc.params),
        "radius": disc.radius,
        "layers": rows,
        "disc": encode_disc(disc),
    }
    return json.dumps(doc, indent=1) + "\n"


def to_json_doc(payload: dict) -> str:
    return json.dumps({"schema_version": SCHEMA_VERSION, **payload}, indent=1) + "\n"


def write_output(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    Path(path).write_text(text, encoding="utf-8", newline="\n")
