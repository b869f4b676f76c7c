"""Cross-check a generated disc against the recurrences, closed forms and limits."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .analysis import (FORM_TOL, area_series, avg_curvature_exact, avg_curvature_limit,
                       ratio_limit, ratio_limit_st)
from .errors import UnsupportedError
from .params import Center, Params, derive_pr
from .sequences import Quantity, closed_form, closed_form_eval, terms
from .tiling import (Disc, curvature_report, degree_violations, generate_disc,
                     local_rule_violations, picks_check, sphere_stats, y_count)

#: Relative agreement required between closed form and exact terms.
CLOSED_FORM_TOL = 1e-6


@dataclass
class Check:
    name: str
    passed: bool
    max_deviation: float
    detail: str = ""


@dataclass
class VerifyReport:
    params: Params
    radius: int
    regime: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, deviation: float, tol: float = 0.0, detail: str = "") -> None:
        self.checks.append(Check(name, deviation <= tol, float(deviation), detail))

    def to_dict(self) -> dict:
        return {
            "params": {"s": self.params.s, "t": self.params.t, "center": self.params.center.value},
            "radius": self.radius,
            "regime": self.regime,
            "passed": self.passed,
            "checks": [asdict(c) for c in self.checks],
        }


def _exact_dev(a: list, b: list) -> float:
    return float(max((abs(x - y) for x, y in zip(a, b)), default=0))


def verify(params: Params, radius: int, disc: Disc | None = None, **gen_kwargs) -> VerifyReport:
    """Run every identity that applies to ``params`` on a disc of the given radius."""
    disc = disc if disc is not None else generate_disc(params, radius, **gen_kwargs)
    ns = range(1, disc.radius)
    stats = [sphere_stats(disc, n) for n in range(disc.radius)]
    labelled = not (params.uniform and params.t % 2)
    regime = "flat" if params.is_flat else derive_pr(params).regime.value
    rep = VerifyReport(params, disc.radius, regime)

    if labelled:
        rep.add("vertex split |S| = |V| + |W|",
                max((abs(x.len_S - x.count_V - x.count_W) for x in stats), default=0))
        rep.add("edge split |S| = |E| + |F|",
                max((abs(x.len_S - x.count_E - x.count_F) for x in stats), default=0))
        rep.add("|E| = 2 |V|", max((abs(x.count_E - 2 * x.count_V) for x in stats), default=0))
        S, T = params.S, params.T
        rel1 = [abs(stats[n].len_S - (S * stats[n - 1].count_V + T * stats[n - 1].count_W
                                      - stats[n - 2].len_S)) for n in range(2, disc.radius)]
        rep.add("length recurrence from the previous two spheres", max(rel1, default=0))
        rel2 = [abs(Fraction(T, 2) * stats[n - 1].count_W - stats[n].count_V - stats[n - 2].count_V)
                for n in range(2, disc.radius)]
        rep.add("s-vertex recurrence", float(max(rel2, default=0)))
        rep.add("kind rules at interior vertices", local_rule_violations(disc))
    rep.add("double-parent vertices match the length two spheres in",
            max((abs(y_count(disc, n) - stats[n - 1].len_S) for n in range(2, disc.radius)), default=0))
    rep.add("triangle count equals degree at interior vertices", degree_violations(disc))
    curv = [curvature_report(disc, n) for n in ns]
    rep.add("Gauss-Bonnet k_g + K = 6", max((abs(c.k_g + c.K - 6) for c in curv), default=0))
    rep.add("Pick's formula", sum(not picks_check(disc, n) for n in ns))

    if params.is_flat:
        rep.add("flat lengths 6n", _exact_dev([x.len_S for x in stats], [6 * n for n in range(disc.radius)]))
        rep.add("flat areas 6n^2", _exact_dev([x.area for x in stats], [6 * n * n for n in range(disc.radius)]))
        rep.add("flat curvature K = 0", max((abs(c.K) for c in curv), default=0))
        return rep

    n_max = disc.radius - 1
    for q in Quantity:
        try:
            xs = terms(params, q, params.center, n_max)
        except UnsupportedError:
            continue
        gen = [getattr(x, q.value) for x in stats]
        rep.add(f"recurrence matches disc: {q.value}", _exact_dev(xs, gen))
        cf = closed_form(params, q, params.center)
        rel = max((abs(closed_form_eval(cf, n) - x) / max(1, abs(x)) for n, x in enumerate(xs)), default=0)
        rep.add(f"closed form matches recurrence: {q.value}", rel, CLOSED_FORM_TOL)
    rep.add("area from sphere lengths", _exact_dev(area_series(params, params.center, n_max),
                                                  [x.area for x in stats]))
    if params.center is Center.S_VERTEX:
        exact = avg_curvature_exact(params, n_max)
        rep.add("average curvature from sphere counts",
                float(max((abs(c.K_avg_exact - e) for c, e in zip(curv, exact)), default=0)))
    lim = ratio_limit(params)
    rep.add("ratio limit forms agree", abs(lim - ratio_limit_st(params)), FORM_TOL * max(1.0, lim))
    rep.add("curvature limit is 2 - P", abs(avg_curvature_limit(params) - (2 - derive_pr(params).P)))
    return rep
