"""m-fold dunce caps: H~^2 = Z/m, and the Bockstein mod ell on H~^1 is
nonzero exactly when g^2 does not divide m, where g = gcd(ell, m).

Run:  python demos/03_dunce_caps.py
"""
from math import gcd

from bockstein import bockstein, dunce_cap, integral_cohomology, mod_cohomology

# %% Each cap is a folded disk; the generator records the subdivision used.
for m in range(2, 11):
    cx = dunce_cap(m)
    print(f"m={m:2d}: {cx.n} vertices, q={cx.metadata['q']}, H~^2 = {integral_cohomology(cx, 2)}")

# %% The gcd rule, row by row (X = nonzero Bockstein).
print("\n      ell: " + " ".join(f"{ell}" for ell in range(2, 10)))
for m in range(2, 11):
    cx = dunce_cap(m)
    row = []
    for ell in range(2, 10):
        g = gcd(ell, m)
        nonzero = not bockstein(cx, 1, ell).is_zero
        assert nonzero == (m % (g * g) != 0)
        assert mod_cohomology(cx, 1, ell).order() == g
        row.append("X" if nonzero else ".")
    print(f"m={m:2d}:      " + " ".join(row))

# %% The four-fold cap: invisible mod 2, visible mod 4.
cap4 = dunce_cap(4)
print("\nLambda_4 mod 2 zero:", bockstein(cap4, 1, 2).is_zero, " mod 4 zero:", bockstein(cap4, 1, 4).is_zero)
