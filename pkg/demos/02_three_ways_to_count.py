"""
Three ways to count a sphere
============================

Sphere lengths can be read off an explicit disc, run forward with an
order-4 integer recurrence, or evaluated from a closed form built on the
roots of ``(x^2 - P x + 1)(x^2 + R x + 1)``.  They agree.
"""

from stuniform import (Center, Params, Quantity, closed_form, closed_form_eval, derive_pr,
                       generate_disc, sphere_stats, terms)

for s, t in [(8, 6), (10, 6), (16, 8)]:
    params = Params(s, t, Center.T_VERTEX)
    pr = derive_pr(params)
    print(f"\n({s},{t}) around a t-vertex: P={pr.P:.6f} R={pr.R:.6f} ({pr.regime.value})")

    disc = generate_disc(params, 7)
    from_disc = [sphere_stats(disc, n).len_S for n in range(7)]
    exact = terms(params, Quantity.LEN_S, n_max=6)
    cf = closed_form(params, Quantity.LEN_S)
    approx = [closed_form_eval(cf, n) for n in range(7)]

    print("disc       ", from_disc)
    print("recurrence ", exact)
    print("closed form", [f"{x:.3f}" for x in approx])

# The recurrence keeps going long after a disc would exhaust memory.
big = terms(Params(16, 8), Quantity.LEN_S, n_max=60)[-1]
print(f"\n|S_60| for (16,8) has {len(str(big))} digits")
