"""Reduced simplicial cohomology with integer and ``Z/ell`` coefficients, and
the Bockstein operator attached to ``0 -> Z -> Z -> Z/ell -> 0``.

For a degree ``k`` write ``B = D^k`` and ``A = D^{k-1}``.  With
``U_B B V_B = diag(b)`` of rank ``r``, the cochain coordinates ``y = V_B^{-1} x``
split into ``r`` "boundary" coordinates, on which the cocycle condition mod
``ell`` reads ``b_i y_i = 0``, and ``c - r`` free coordinates that contain the
image of ``A`` (because ``B A = 0``).  A second Smith form of that image
finishes the decomposition, so that

    H^k(Z/ell) = (+)_i Z/gcd(b_i, ell)  (+)  (+)_j Z/gcd(a_j, ell)  (+)  (Z/ell)^free

with explicit cocycle representatives.  Both Smith forms depend only on the
complex and ``k``, so they are cached and shared across all moduli.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Optional, Sequence

from sympy import isprime

from .linalg import IntegerMatrix, SNFDecomposition, cokernel_invariants, rank_mod_p, snf, solve_mod
from .simplicial import SimplicialComplex, coboundary_matrix

__all__ = [
    "IntCohomology",
    "ModCohomology",
    "BocksteinMap",
    "integral_cohomology",
    "mod_cohomology",
    "bockstein",
    "bockstein_image",
    "format_group",
    "clear_caches",
]


@dataclass(frozen=True)
class IntCohomology:
    degree: int
    free_rank: int
    invariant_factors: tuple[int, ...]

    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    def __str__(self):
        return format_group(self.free_rank, self.invariant_factors)


def format_group(free_rank: int, torsion: Sequence[int]) -> str:
    """``Z/2 + Z/4 + Z^3`` style, written with the direct-sum sign."""
    parts = [f"Z/{d}" for d in torsion]
    if free_rank == 1:
        parts.append("Z")
    elif free_rank > 1:
        parts.append(f"Z^{free_rank}")
    return " ⊕ ".join(parts) if parts else "0"


@dataclass(frozen=True)
class _DegreeData:
    cochains: int
    boundary: SNFDecomposition  # SNF of D^k
    image: SNFDecomposition  # SNF of the free-coordinate block of V_B^{-1} D^{k-1}
    image_block: IntegerMatrix


@lru_cache(maxsize=4096)
def _degree_data(cx: SimplicialComplex, k: int) -> _DegreeData:
    B = coboundary_matrix(cx, k)
    A = coboundary_matrix(cx, k - 1)
    sb = snf(B)
    r = sb.rank
    moved = sb.right_inverse @ A
    c = B.cols
    for i in range(r):
        assert not any(moved.row(i)), "D^k D^(k-1) != 0"
    block = IntegerMatrix.from_rows([moved.row(i) for i in range(r, c)], cols=A.cols)
    return _DegreeData(c, sb, snf(block), block)


def integral_cohomology(cx: SimplicialComplex, k: int) -> IntCohomology:
    """``H~^k(cx; Z)`` as free rank plus invariant factors."""
    data = _degree_data(cx, k)
    free, torsion = cokernel_invariants(data.image_block)
    return IntCohomology(k, free, tuple(torsion))


@dataclass(frozen=True)
class ModCohomology:
    """``H~^k(cx; Z/ell)`` as a direct sum of cyclic groups.

    ``generators[i]`` is an integer cochain (entries in ``[0, ell)``) that is
    a cocycle mod ``ell`` and generates a summand of order ``orders[i]``.
    """

    degree: int
    modulus: int
    generators: tuple[tuple[int, ...], ...]
    orders: tuple[int, ...]
    complex: SimplicialComplex = field(compare=False, repr=False)
    # (kind, index) per generator: kind 0 = boundary coordinate, 1 = free block
    _slots: tuple[tuple[int, int], ...] = field(compare=False, repr=False, default=())

    @property
    def dimension(self) -> int:
        """Number of cyclic summands (the F_p-dimension when ``ell`` is prime)."""
        return len(self.orders)

    def order(self) -> int:
        out = 1
        for o in self.orders:
            out *= o
        return out

    def __str__(self):
        return format_group(0, self.orders)

    def coordinates(self, cocycle: Sequence[int]) -> tuple[int, ...]:
        """Coordinates of the class of a mod-``ell`` cocycle in terms of the generators."""
        ell = self.modulus
        data = _degree_data(self.complex, self.degree)
        y = [v % ell for v in data.boundary.right_inverse.apply(list(cocycle))]
        r = data.boundary.rank
        if any(b * y[i] % ell for i, b in enumerate(data.boundary.diagonal)):
            raise ValueError("vector is not a cocycle mod ell")
        z = data.image.left.apply(y[r:]) if data.cochains > r else []
        out = []
        for (kind, i), o in zip(self._slots, self.orders):
            if kind == 0:
                out.append((y[i] // (ell // o)) % o)
            else:
                out.append(z[i] % o)
        return tuple(out)


@lru_cache(maxsize=16384)
def mod_cohomology(cx: SimplicialComplex, k: int, ell: int) -> ModCohomology:
    """``H~^k(cx; Z/ell)`` with explicit cocycle generators."""
    if ell < 2:
        raise ValueError(f"modulus must be >= 2, got {ell}")
    data = _degree_data(cx, k)
    sb, sa = data.boundary, data.image
    r, c = sb.rank, data.cochains
    gens, orders, slots = [], [], []
    for i, b in enumerate(sb.diagonal):
        g = gcd(b, ell)
        if g > 1:
            gens.append(tuple((ell // g) * v % ell for v in sb.right.column(i)))
            orders.append(g)
            slots.append((0, i))
    for j in range(c - r):
        o = gcd(sa.diagonal[j], ell) if j < sa.rank else ell
        if o > 1:
            tail = sa.left_inverse.column(j)
            x = sb.right.apply([0] * r + tail)
            gens.append(tuple(v % ell for v in x))
            orders.append(o)
            slots.append((1, j))
    return ModCohomology(k, ell, tuple(gens), tuple(orders), cx, tuple(slots))


def bockstein_image(cx: SimplicialComplex, k: int, ell: int, cocycle: Sequence[int]) -> list[int]:
    """Lift ``cocycle`` to Z, apply ``D^k`` and divide by ``ell``.

    The result is an integral ``(k+1)``-cocycle whose class mod ``ell`` is the
    Bockstein of the class of ``cocycle``.
    """
    image = coboundary_matrix(cx, k).apply(list(cocycle))
    if any(v % ell for v in image):
        raise ValueError("vector is not a cocycle mod ell")
    return [v // ell for v in image]


@dataclass(frozen=True)
class BocksteinMap:
    """``beta: H~^k(Z/ell) -> H~^{k+1}(Z/ell)``.

    ``matrix[i][j]`` is the coefficient of target generator ``i`` (mod its
    order) in the image of source generator ``j``.  ``rank`` is only defined
    for prime moduli.
    """

    modulus: int
    degree: int
    matrix: tuple[tuple[int, ...], ...]
    is_zero: bool
    rank: Optional[int]
    source: ModCohomology = field(repr=False)
    target: ModCohomology = field(repr=False)
    images: tuple[tuple[int, ...], ...] = field(repr=False, default=())

    def nonzero_columns(self) -> list[int]:
        return [j for j in range(len(self.source.orders)) if any(row[j] for row in self.matrix)]


@lru_cache(maxsize=16384)
def bockstein(cx: SimplicialComplex, k: int, ell: int) -> BocksteinMap:
    """The Bockstein on reduced cohomology of ``cx`` in degree ``k`` mod ``ell``."""
    src = mod_cohomology(cx, k, ell)
    tgt = mod_cohomology(cx, k + 1, ell)
    D = coboundary_matrix(cx, k)
    images, columns = [], []
    is_zero = True
    for g in src.generators:
        d = bockstein_image(cx, k, ell, g)
        images.append(tuple(d))
        columns.append(tgt.coordinates(d))
        if solve_mod(D, d, ell) is None:
            is_zero = False
    matrix = tuple(tuple(col[i] for col in columns) for i in range(tgt.dimension))
    if is_zero != (not any(any(row) for row in matrix)):
        raise AssertionError("coordinate and coboundary tests disagree")
    rank = None
    if isprime(ell):
        rank = rank_mod_p(IntegerMatrix.from_rows(matrix, cols=src.dimension), ell) if matrix else 0
    return BocksteinMap(ell, k, matrix, is_zero, rank, src, tgt, tuple(images))


def clear_caches():
    """Drop every memoized Smith form, coboundary matrix and cohomology group."""
    for fn in (snf, coboundary_matrix, _degree_data, mod_cohomology, bockstein):
        fn.cache_clear()
