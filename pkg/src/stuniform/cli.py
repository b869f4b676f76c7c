"""Command-line entry point: generate, verify, limits, render, export.

Exit status is 0 on success, 1 when an invariant fails and 2 for invalid
arguments.
"""

from __future__ import annotations

import argparse
import sys

from . import analysis, render
from .errors import ContradictionError, StUniformError
from .export import (LAYER_COLUMNS, Command, Format, RunConfig, generate_json, layer_rows,
                     params_dict, to_json_doc, write_csv, write_output)
from .params import Params, derive_pr, validate_params
from .sequences import Quantity, terms
from .tiling import DEFAULT_MAX_RADIUS, generate_disc
from .verify import verify

EXIT_OK, EXIT_INVARIANT, EXIT_USAGE = 0, 1, 2

#: Pairs listed by ``limits`` when none are given, grouped by shared P.
DEFAULT_LIMIT_PAIRS = ((10, 6), (7, 7), (16, 6), (8, 8), (24, 6), (9, 9),
                       (34, 6), (16, 8), (10, 10), (7, 12))

LIMIT_COLUMNS = ["s", "t", "S", "T", "P", "R", "regime", "ratio_limit", "curvature_limit",
                 "ratio_residual", "curvature_residual"]


def _pair(text: str) -> tuple[int, int]:
    try:
        s, t = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected S,T integers, got {text!r}") from None
    return s, t


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--s", type=int, help="degree of s-vertices")
    common.add_argument("--t", type=int, help="degree of t-vertices")
    common.add_argument("--center", choices=["s", "t"], default="s", help="kind of the center vertex")
    common.add_argument("--radius", type=int, help="number of layers to grow")
    common.add_argument("--n-max", type=int, help="last sphere index for sequence output")
    common.add_argument("--format", choices=[f.value for f in Format], help="output format")
    common.add_argument("--out", help="output path (default: stdout)")
    common.add_argument("--max-radius-override", type=int, metavar="R",
                        help=f"raise the radius cap (default {DEFAULT_MAX_RADIUS})")

    parser = argparse.ArgumentParser(prog="stuniform",
                                     description="Explore (s,t)-uniform triangulated discs.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("generate", parents=[common], help="grow a disc and tabulate per-sphere statistics")
    sub.add_parser("verify", parents=[common], help="cross-check a disc against recurrences and limits")
    p = sub.add_parser("limits", parents=[common], help="ratio and curvature limits for several pairs")
    p.add_argument("--pairs", nargs="+", type=_pair, metavar="S,T", help="pairs to tabulate")
    p = sub.add_parser("render", parents=[common], help="write an SVG figure")
    p.add_argument("kind", help="disc | hyperbolas | ratio-convergence")
    sub.add_parser("export", parents=[common], help="exact recurrence terms for every quantity")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    defaults = {"generate": "csv", "verify": "json", "limits": "csv", "render": "svg", "export": "csv"}
    return RunConfig(
        command=Command(ns.command), s=ns.s, t=ns.t, center=ns.center,
        radius=ns.radius, n_max=ns.n_max, output_path=ns.out,
        format=Format(ns.format or defaults[ns.command]),
        render_kind=getattr(ns, "kind", None),
        pairs=tuple(getattr(ns, "pairs", None) or ()),
        max_radius=ns.max_radius_override,
    )


def _params(cfg: RunConfig) -> Params:
    if cfg.s is None or cfg.t is None:
        raise argparse.ArgumentError(None, "--s and --t are required")
    return validate_params(cfg.s, cfg.t, cfg.center)


def _gen_kwargs(cfg: RunConfig) -> dict:
    return {} if cfg.max_radius is None else {"max_radius": cfg.max_radius}


def cmd_generate(cfg: RunConfig) -> int:
    params = _params(cfg)
    disc = generate_disc(params, cfg.radius or 5, **_gen_kwargs(cfg))
    if cfg.format is Format.SVG:
        write_output(render.render_disc(disc), cfg.output_path)
        return EXIT_OK
    rows = layer_rows(disc)
    if cfg.format is Format.JSON:
        write_output(generate_json(disc, rows), cfg.output_path)
    else:
        write_output(write_csv(LAYER_COLUMNS, rows), cfg.output_path)
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    params = _params(cfg)
    report = verify(params, cfg.radius or 10, **_gen_kwargs(cfg))
    if cfg.format is Format.CSV:
        rows = [{"check": c.name, "passed": c.passed, "max_deviation": c.max_deviation}
                for c in report.checks]
        write_output(write_csv(["check", "passed", "max_deviation"], rows), cfg.output_path)
    else:
        write_output(to_json_doc(report.to_dict()), cfg.output_path)
    return EXIT_OK if report.passed else EXIT_INVARIANT


def limit_row(s: int, t: int, n_max: int) -> dict:
    params = validate_params(s, t)
    row = {"s": s, "t": t, "S": params.S, "T": params.T}
    if params.is_flat:
        # limits are singular here; keep the row so the table lines up with the input
        marker = "error: flat tiling, P = 2"
        row.update({"P": 2.0, "R": 0.0, "regime": "flat", "ratio_limit": marker,
                    "curvature_limit": marker, "ratio_residual": marker, "curvature_residual": marker})
        return row
    pr = derive_pr(params)
    rs = analysis.ratio_series(params, params.center, n_max)
    k_lim = analysis.avg_curvature_limit(params)
    k_n = analysis.avg_curvature_series(params, n_max)[-1]
    row.update({"P": pr.P, "R": pr.R, "regime": pr.regime.value, "ratio_limit": rs.limit,
                "curvature_limit": k_lim, "ratio_residual": rs.residual,
                "curvature_residual": abs(k_n - k_lim)})
    return row


def cmd_limits(cfg: RunConfig) -> int:
    if cfg.pairs:
        pairs = cfg.pairs
    elif cfg.s is not None and cfg.t is not None:
        pairs = ((cfg.s, cfg.t),)
    else:
        pairs = DEFAULT_LIMIT_PAIRS
    n_max = cfg.n_max or 60
    rows = [limit_row(s, t, n_max) for s, t in pairs]
    if cfg.format is Format.JSON:
        write_output(to_json_doc({"n_max": n_max, "rows": rows}), cfg.output_path)
    else:
        write_output(write_csv(LIMIT_COLUMNS, rows), cfg.output_path)
    return EXIT_OK


def cmd_render(cfg: RunConfig) -> int:
    kind = render.check_kind(cfg.render_kind)
    if kind == "hyperbolas":
        text = render.render_hyperbolas()
    elif kind == "disc":
        params = _params(cfg)
        text = render.render_disc(generate_disc(params, cfg.radius or 3, **_gen_kwargs(cfg)))
    else:
        text = render.render_ratio_convergence(_params(cfg), cfg.n_max or 20)
    write_output(text, cfg.output_path)
    return EXIT_OK


def cmd_export(cfg: RunConfig) -> int:
    params = _params(cfg)
    n_max = cfg.n_max or 10
    cols, series = ["n"], []
    for q in Quantity:
        try:
            series.append(terms(params, q, params.center, n_max))
        except StUniformError:
            continue
        cols.append(q.value)
    rows = [dict(zip(cols, [n, *(x[n] for x in series)])) for n in range(n_max + 1)]
    if cfg.format is Format.JSON:
        write_output(to_json_doc({"params": params_dict(params), "rows": rows}), cfg.output_path)
    else:
        write_output(write_csv(cols, rows), cfg.output_path)
    return EXIT_OK


COMMANDS = {Command.GENERATE: cmd_generate, Command.VERIFY: cmd_verify, Command.LIMITS: cmd_limits,
            Command.RENDER: cmd_render, Command.EXPORT: cmd_export}


def run(cfg: RunConfig) -> int:
    return COMMANDS[cfg.command](cfg)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return run(config_from_args(ns))
    except ContradictionError as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (ValueError, argparse.ArgumentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: cannot write {exc.filename or ns.out}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
