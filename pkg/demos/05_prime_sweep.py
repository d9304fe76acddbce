"""Which primes give a nonzero local-cohomology Bockstein?

Only primes dividing torsion in the cohomology of some link can, so the
sweep is finite.  Each prime found certifies p-torsion in H^{k+1}_a(R).

Run:  python demos/05_prime_sweep.py
"""
from bockstein import bockstein_prime_sweep, dunce_cap, rp2_six_vertex, simplex_boundary
from bockstein.stanley_reisner import candidate_primes

rp2 = rp2_six_vertex()
print("RP^2, k=3:", bockstein_prime_sweep(rp2, 3))

for m in (6, 10):
    cap = dunce_cap(m)
    k = cap.n - 3
    print(f"Lambda_{m} (n={cap.n}), k={k}: candidates {candidate_primes(cap)} -> {bockstein_prime_sweep(cap, k)}")

sphere = simplex_boundary(5)
print("3-sphere, all k:", {k: bockstein_prime_sweep(sphere, k) for k in range(0, 6)})

# Four-fold cap: 2-torsion exists, but only the mod-4 Bockstein detects it.
cap4 = dunce_cap(4)
print("Lambda_4:", bockstein_prime_sweep(cap4, cap4.n - 3))
