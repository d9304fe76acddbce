"""Stanley-Reisner ideals, Hochster's formula and Bocksteins on local cohomology.

Run:  python demos/04_hochster_local_cohomology.py
"""
from bockstein import (
    dunce_cap,
    graded_cech_complex,
    hochster_dimension,
    hochster_table,
    local_bockstein_is_zero,
    rp2_six_vertex,
    sr_ideal,
)

rp2 = rp2_six_vertex()

# %% The Stanley-Reisner ideal: one generator per minimal non-face.
print("ideal:", ", ".join(sr_ideal(rp2).monomials()))

# %% Graded pieces of H^3_n(R/(a + 2R)) in degrees u <= 0, indexed by the
# negative support tau of u: each is the mod-2 cohomology of link(tau).
table = hochster_table(rp2, 2, 3)
for row in table.nonzero_rows()[:4]:
    print(f"tau={row.tau}: H~^{row.link_degree}(link; Z/2) has orders {row.orders}")

# %% Cross-check one entry directly against the graded Cech complex.
u = [-1, 0, 0, 0, 0, 0]
cech = graded_cech_complex(rp2, u)
print("Cech strand dim at index 3:", cech.dimension_mod_p(3, 2),
      " Hochster:", hochster_dimension(rp2, 2, 3, (1,)))

# %% Local cohomology Bocksteins H^k_a(R/pR) -> H^{k+1}_a(R/pR).
rep = local_bockstein_is_zero(rp2, 2, 3)
print("\nRP^2, p=2, k=3:", rep.to_json())
print(rep.torsion_certificate())
print("odd primes, every k zero:",
      all(local_bockstein_is_zero(rp2, p, k).is_zero for p in (3, 5, 7) for k in range(0, 8)))

# %% Prime-power moduli use the same link sweep (flagged as the analogue).
cap4 = dunce_cap(4)
k = cap4.n - 3
print(f"\nLambda_4 (n={cap4.n}), k={k}: mod 2 zero:", local_bockstein_is_zero(cap4, 2, k).is_zero)
r4 = local_bockstein_is_zero(cap4, 4, k)
print(f"mod 4 zero: {r4.is_zero}, prime-power analogue: {r4.prime_power_analogue}")
