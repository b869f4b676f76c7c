"""
Limits that only depend on P
============================

Area over length tends to ``sqrt((P+2)/(P-2))`` and the average curvature
to ``2 - P``.  Pairs on one curve ``T (S + P) = 2 P^2`` share both.
"""

from stuniform import Params, avg_curvature_limit, avg_curvature_series, ratio_series
from stuniform.analysis import lattice_points
from stuniform.render import render_hyperbolas, render_ratio_convergence

for P in (3, 4, 5, 6):
    pairs = [(S + 4, T + 4) for S, T in lattice_points(P)]
    print(f"\nP = {P}: pairs {pairs}")
    for s, t in pairs:
        p = Params(s, t)
        rs = ratio_series(p, n_max=60)
        k = avg_curvature_series(p, 100)[-1]
        print(f"  ({s},{t})  A/|S| -> {rs.limit:.10f}  at n=60: {rs.value(60):.10f}   "
              f"K_avg -> {avg_curvature_limit(p):+.1f}  at n=100: {k:+.8f}")

# The ratio creeps up to its limit, overshooting when R > 2.
with open("ratio_16_6.svg", "w") as fh:
    fh.write(render_ratio_convergence(Params(16, 6), 20))
with open("hyperbolas.svg", "w") as fh:
    fh.write(render_hyperbolas())
print("\nwrote ratio_16_6.svg and hyperbolas.svg")
