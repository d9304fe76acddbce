"""Smith normal form and linear algebra mod ell.

Run:  python demos/01_smith_normal_form.py
"""
from bockstein import IntegerMatrix, cokernel_invariants, kernel_mod, rank_mod_p, snf, solve_mod

# %% A small matrix and its Smith form.  U A V is diagonal, with each
# invariant factor dividing the next.
A = IntegerMatrix.from_rows([[2, 4], [6, 8]])
dec = snf(A)
print("invariant factors:", dec.diagonal)
print("U A V =", (dec.left @ A @ dec.right).to_rows())

# %% The cokernel Z^2 / A Z^2 is Z/2 + Z/4.
print("coker:", cokernel_invariants(A))

# %% Everything is exact: entries grow as large as they need to.
big = IntegerMatrix.from_rows([[2**70, 3**50], [5**40, 7**30]])
print("big invariant factors:", snf(big).diagonal)

# %% Over Z/4 the 1x1 matrix [2] kills exactly {0, 2}; 2x = 1 has no solution.
print("kernel of [2] mod 4:", kernel_mod(IntegerMatrix.from_rows([[2]]), 4))
print("2x = 1 mod 4:", solve_mod(IntegerMatrix.from_rows([[2]]), [1], 4))
print("2x = 2 mod 4:", solve_mod(IntegerMatrix.from_rows([[2]]), [2], 4))

# %% Ranks over prime fields come straight from the invariant factors.
print("rank mod 2:", rank_mod_p(A, 2), " rank mod 3:", rank_mod_p(A, 3))
