"""Exact integer linear algebra.

Everything here works over Python ints, so entries never overflow.  The
central routine is :func:`snf`, a Smith normal form with both transforms and
their inverses; the mod-``ell`` helpers (:func:`kernel_mod`,
:func:`solve_mod`, :func:`rank_mod_p`) read their answers off the diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable, Optional, Sequence

from sympy import isprime

__all__ = [
    "IntegerMatrix",
    "SNFDecomposition",
    "snf",
    "cokernel_invariants",
    "kernel_mod",
    "solve_mod",
    "rank_mod_p",
]


@dataclass(frozen=True)
class IntegerMatrix:
    """Immutable dense integer matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntegerMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        entries = tuple(int(x) for r in rows for x in r)
        return cls(len(rows), cols, entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def diagonal_matrix(cls, rows: int, cols: int, diag: Sequence[int]) -> "IntegerMatrix":
        e = [0] * (rows * cols)
        for i, d in enumerate(diag):
            e[i * cols + i] = d
        return cls(rows, cols, tuple(e))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[int]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def column(self, j: int) -> list[int]:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def to_rows(self) -> list[list[int]]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix.from_rows(
            [self.column(j) for j in range(self.cols)], cols=self.rows
        )

    def is_zero(self) -> bool:
        return not any(self.entries)

    def apply(self, x: Sequence[int]) -> list[int]:
        """Matrix-vector product."""
        if len(x) != self.cols:
            raise ValueError(f"vector of length {len(x)} for {self.rows}x{self.cols} matrix")
        c = self.cols
        e = self.entries
        nz = [(j, v) for j, v in enumerate(x) if v]
        return [sum(e[i * c + j] * v for j, v in nz) for i in range(self.rows)]

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols_b = [other.column(j) for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            nz = [(k, v) for k, v in enumerate(r) if v]
            out.append([sum(v * b[k] for k, v in nz) for b in cols_b])
        return IntegerMatrix.from_rows(out, cols=other.cols)

    def __repr__(self):
        return f"IntegerMatrix({self.to_rows()!r})"


@dataclass(frozen=True)
class SNFDecomposition:
    """``left @ source @ right == diag(diagonal)`` padded with zeros.

    ``left_inverse`` and ``right_inverse`` are the exact inverses of the two
    unimodular transforms; the cohomology code needs them to move between
    cochain coordinates and the diagonal basis.
    """

    source: IntegerMatrix
    left: IntegerMatrix
    right: IntegerMatrix
    diagonal: tuple[int, ...]
    left_inverse: IntegerMatrix
    right_inverse: IntegerMatrix

    @property
    def rank(self) -> int:
        return len(self.diagonal)

    def diagonal_form(self) -> IntegerMatrix:
        return IntegerMatrix.diagonal_matrix(self.source.rows, self.source.cols, self.diagonal)


def _identity_rows(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


class _Reducer:
    """Mutable work state for one Smith normal form computation."""

    def __init__(self, a: IntegerMatrix):
        self.m, self.n = a.rows, a.cols
        self.A = a.to_rows()
        self.U = _identity_rows(self.m)
        self.Ui = _identity_rows(self.m)
        self.V = _identity_rows(self.n)
        self.Vi = _identity_rows(self.n)

    # row i += q * row j
    def row_add(self, i: int, j: int, q: int):
        for M in (self.A, self.U):
            src, dst = M[j], M[i]
            for c, v in enumerate(src):
                if v:
                    dst[c] += q * v
        # Ui <- Ui E^{-1}: column j -= q * column i
        for r in self.Ui:
            if r[i]:
                r[j] -= q * r[i]

    def row_swap(self, i: int, j: int):
        if i == j:
            return
        for M in (self.A, self.U):
            M[i], M[j] = M[j], M[i]
        for r in self.Ui:
            r[i], r[j] = r[j], r[i]

    def row_negate(self, i: int):
        for M in (self.A, self.U):
            M[i] = [-v for v in M[i]]
        for r in self.Ui:
            r[i] = -r[i]

    # column i += q * column j
    def col_add(self, i: int, j: int, q: int):
        for M in (self.A, self.V):
            for r in M:
                if r[j]:
                    r[i] += q * r[j]
        # Vi <- E^{-1} Vi: row j -= q * row i
        src, dst = self.Vi[i], self.Vi[j]
        for c, v in enumerate(src):
            if v:
                dst[c] -= q * v

    def col_swap(self, i: int, j: int):
        if i == j:
            return
        for M in (self.A, self.V):
            for r in M:
                r[i], r[j] = r[j], r[i]
        self.Vi[i], self.Vi[j] = self.Vi[j], self.Vi[i]

    def _pivot(self, t: int) -> Optional[tuple[int, int]]:
        best, where = 0, None
        for i in range(t, self.m):
            row = self.A[i]
            for j in range(t, self.n):
                v = row[j]
                if v:
                    a = v if v > 0 else -v
                    if where is None or a < best:
                        best, where = a, (i, j)
                        if a == 1:
                            return where
        return where

    def run(self) -> list[int]:
        A = self.A
        diag = []
        for t in range(min(self.m, self.n)):
            while True:
                where = self._pivot(t)
                if where is None:
                    return diag
                self.row_swap(t, where[0])
                self.col_swap(t, where[1])
                p = A[t][t]
                for i in range(t + 1, self.m):
                    if A[i][t]:
                        self.row_add(i, t, -(A[i][t] // p))
                for j in range(t + 1, self.n):
                    if A[t][j]:
                        self.col_add(j, t, -(A[t][j] // p))
                if any(A[i][t] for i in range(t + 1, self.m)) or any(A[t][t + 1:]):
                    continue
                bad = self._non_multiple(t, p)
                if bad is None:
                    break
                self.row_add(t, bad, 1)
            if A[t][t] < 0:
                self.row_negate(t)
            diag.append(A[t][t])
        return diag

    def _non_multiple(self, t: int, p: int) -> Optional[int]:
        for i in range(t + 1, self.m):
            row = self.A[i]
            for j in range(t + 1, self.n):
                if row[j] % p:
                    return i
        return None


@lru_cache(maxsize=4096)
def snf(a: IntegerMatrix) -> SNFDecomposition:
    """Smith normal form ``U A V = diag(d_1, ..., d_r)`` with ``d_i | d_{i+1}``.

    Pivots on the smallest nonzero absolute value each round.  Empty matrices
    give an empty diagonal.
    """
    red = _Reducer(a)
    diag = red.run()
    return SNFDecomposition(
        source=a,
        left=IntegerMatrix.from_rows(red.U, cols=a.rows),
        right=IntegerMatrix.from_rows(red.V, cols=a.cols),
        diagonal=tuple(diag),
        left_inverse=IntegerMatrix.from_rows(red.Ui, cols=a.rows),
        right_inverse=IntegerMatrix.from_rows(red.Vi, cols=a.cols),
    )


def cokernel_invariants(a: IntegerMatrix) -> tuple[int, list[int]]:
    """``coker(a) = Z^free (+) Z/d_1 (+) ...``; returns ``(free, [d_i > 1])``."""
    d = snf(a).diagonal
    return a.rows - len(d), [x for x in d if x > 1]


def _check_modulus(ell: int):
    if ell < 2:
        raise ValueError(f"modulus must be >= 2, got {ell}")


def kernel_mod(a: IntegerMatrix, ell: int) -> list[list[int]]:
    """Generators of ``{x mod ell : a x = 0 mod ell}`` as a Z/ell-module."""
    _check_modulus(ell)
    dec = snf(a)
    V = dec.right
    gens = []
    for i in range(a.cols):
        scale = ell // gcd(dec.diagonal[i], ell) if i < dec.rank else 1
        if scale == ell:
            continue
        v = [(scale * x) % ell for x in V.column(i)]
        if any(v):
            gens.append(v)
    return gens


def solve_mod(a: IntegerMatrix, b: Sequence[int], ell: int) -> Optional[list[int]]:
    """A solution of ``a x = b (mod ell)`` reduced mod ``ell``, or None."""
    _check_modulus(ell)
    if len(b) != a.rows:
        raise ValueError(f"right-hand side has length {len(b)}, matrix has {a.rows} rows")
    dec = snf(a)
    c = dec.left.apply(b)
    y = [0] * a.cols
    for i, ci in enumerate(c):
        if i < dec.rank:
            d = dec.diagonal[i]
            g = gcd(d, ell)
            if ci % g:
                return None
            mod = ell // g
            if mod > 1:
                y[i] = (ci // g) * pow(d // g, -1, mod) % mod
        elif ci % ell:
            return None
    return [v % ell for v in dec.right.apply(y)]


def rank_mod_p(a: IntegerMatrix, p: int) -> int:
    """Rank of ``a`` over the field with ``p`` elements."""
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    return sum(1 for d in snf(a).diagonal if d % p)


def mat_vec_mod(a: IntegerMatrix, x: Iterable[int], ell: int) -> list[int]:
    return [v % ell for v in a.apply(list(x))]
