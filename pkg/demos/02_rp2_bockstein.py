"""Cohomology and the Bockstein of the six-vertex real projective plane.

Run:  python demos/02_rp2_bockstein.py
"""
from bockstein import bockstein, integral_cohomology, mod_cohomology, rp2_six_vertex

rp2 = rp2_six_vertex()
print("facets:", rp2.facets)
print("f-vector (dims -1, 0, 1, 2):", rp2.f_vector())

# %% Integral and mod-2 cohomology.
for k in range(0, 3):
    print(f"H~^{k}:  Z -> {integral_cohomology(rp2, k)}   Z/2 -> {mod_cohomology(rp2, k, 2)}")

# %% The Bockstein H~^1(Z/2) -> H~^2(Z/2) is an isomorphism.  The generating
# 1-cocycle c lifts to Z; its coboundary is divisible by 2 and (D c)/2
# represents the generator in degree 2.
beta = bockstein(rp2, 1, 2)
print("matrix:", beta.matrix, " rank:", beta.rank)
print("source cocycle:", beta.source.generators[0])
print("(D c)/2:      ", beta.images[0])

# %% Odd coefficients see no torsion at all.
for p in (3, 5, 7):
    b = bockstein(rp2, 1, p)
    print(f"p={p}: H~^1 = {b.source}, beta zero: {b.is_zero}")
