"""
Growing a disc one sphere at a time
===================================

Around an 8-vertex of the (8,6) tiling every face center has degree 8 and
every tiling vertex degree 6.  We grow five layers and look at what each
sphere holds.
"""

from stuniform import Params, curvature_report, generate_disc, sphere_stats
from stuniform.render import render_disc

disc = generate_disc(Params(8, 6), 5)
print("layer sizes:", disc.layer_sizes)

# Each complete sphere: length, vertex kinds, edge kinds, enclosed area.
for n in range(1, disc.radius):
    st = sphere_stats(disc, n)
    print(f"n={n}  |S|={st.len_S:4d}  s-vertices={st.count_V:3d}  t-vertices={st.count_W:3d}  "
          f"area={st.area}")

# Curvature is concentrated at the vertices; the boundary picks up what the
# interior loses, so k_g + K stays at 6 however large the disc.
for n in range(1, disc.radius):
    r = curvature_report(disc, n)
    print(f"n={n}  k_g={r.k_g:4d}  K={r.K:5d}  K_avg={r.K_avg:+.4f}")

# A ring picture: layer k on the circle of radius k, s-polygons filled.
with open("disc_8_6.svg", "w") as fh:
    fh.write(render_disc(generate_disc(Params(8, 6), 3)))
print("wrote disc_8_6.svg")
