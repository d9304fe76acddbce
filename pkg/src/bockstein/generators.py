"""Built-in complexes: the six-vertex RP^2, m-fold dunce caps, spheres,
cycles and seeded random complexes."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from .cohomology import integral_cohomology
from .simplicial import SimplicialComplex, from_facets

__all__ = [
    "rp2_six_vertex",
    "dunce_cap",
    "simplex_boundary",
    "cycle",
    "full_simplex",
    "random_complex",
    "from_spec",
]

RP2_FACETS = [
    (1, 2, 5), (1, 2, 6), (1, 3, 4), (1, 3, 6), (1, 4, 5),
    (2, 3, 4), (2, 3, 5), (2, 4, 6), (3, 5, 6), (4, 5, 6),
]


def rp2_six_vertex() -> SimplicialComplex:
    """The minimal 6-vertex triangulation of the real projective plane."""
    return from_facets(6, RP2_FACETS, {"generator": "rp2"})


def simplex_boundary(n: int) -> SimplicialComplex:
    """Boundary of the simplex on vertices ``1..n``, an ``(n-2)``-sphere."""
    if n < 2:
        raise ValueError("simplex_boundary needs n >= 2")
    return from_facets(n, combinations(range(1, n + 1), n - 1), {"generator": "simplex-boundary", "n": n})


def cycle(n: int) -> SimplicialComplex:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return from_facets(n, [(i, i % n + 1) for i in range(1, n + 1)], {"generator": "cycle", "n": n})


def full_simplex(n: int) -> SimplicialComplex:
    if n < 1:
        raise ValueError("full_simplex needs n >= 1")
    return from_facets(n, [range(1, n + 1)], {"generator": "simplex", "n": n})


def _annulus(outer: list[int], inner: list[int]) -> list[tuple[int, int, int]]:
    """Zip two concentric cycles into a triangulated annulus.

    Outer vertex ``i`` sits at angle ``i/len(outer)`` and inner vertex ``j``
    at ``(j + 1/2)/len(inner)`` (fractions of a full turn); the walk always
    advances along whichever cycle has the nearer next vertex.
    """
    N, R = len(outer), len(inner)
    tris = []
    i, j = 0, -1
    while i < N or j < R - 1:
        next_outer = Fraction(i + 1, N)
        next_inner = Fraction(2 * j + 3, 2 * R)
        if j == R - 1 or (i < N and next_outer <= next_inner):
            tris.append((outer[i % N], outer[(i + 1) % N], inner[j % R]))
            i += 1
        else:
            tris.append((outer[i % N], inner[j % R], inner[(j + 1) % R]))
            j += 1
    return tris


def _dunce_disk(m: int, q: int) -> tuple[int, list[tuple[int, ...]]]:
    """Triangulated disk with ``m*q`` boundary vertices, already folded.

    Boundary position ``i`` becomes vertex ``i mod q + 1``.  Two interior
    rings (``m*q`` and 3 vertices) and a centre vertex follow.
    """
    N = m * q
    boundary = [i % q + 1 for i in range(N)]
    ring1 = [q + 1 + i for i in range(N)]
    ring2 = [q + N + 1 + i for i in range(3)]
    centre = q + N + 4
    tris = _annulus(boundary, ring1) + _annulus(ring1, ring2)
    tris += [(ring2[j], ring2[(j + 1) % 3], centre) for j in range(3)]
    return centre, tris


def _folding_is_simplicial(m: int, q: int, tris: list[tuple[int, ...]]) -> bool:
    seen = set()
    for t in tris:
        key = tuple(sorted(t))
        if len(set(t)) != len(t) or key in seen:
            return False
        seen.add(key)
    # interior edges must stay distinct after folding; boundary edges fold m-to-1
    edges: dict[tuple[int, int], int] = {}
    for t in tris:
        for a, b in combinations(t, 2):
            e = (min(a, b), max(a, b))
            edges[e] = edges.get(e, 0) + 1
    for (a, b), count in edges.items():
        on_boundary = a <= q and b <= q
        if on_boundary:
            if (b - a) % q not in (1, q - 1) or count != m:
                return False
        elif count != 2:
            return False
    return True


def dunce_cap(m: int, q: int | None = None, max_q: int = 12) -> SimplicialComplex:
    """A triangulation of the m-fold dunce cap.

    The disk boundary has ``m*q`` vertices and rotation by ``q`` steps is
    folded away.  With ``q=None`` the smallest ``q >= 3`` that folds to a
    simplicial complex with integral cohomology ``(0, 0, Z/m)`` is used; the
    chosen ``q`` is recorded in ``metadata``.
    """
    if m < 2:
        raise ValueError("dunce cap needs m >= 2")
    candidates = [q] if q is not None else range(3, max_q + 1)
    for qq in candidates:
        if qq < 3:
            raise ValueError("subdivision parameter q must be >= 3")
        n, tris = _dunce_disk(m, qq)
        if not _folding_is_simplicial(m, qq, tris):
            continue
        cx = from_facets(n, tris, {"generator": "dunce", "m": m, "q": qq})
        if _dunce_gate(cx, m):
            return cx
    raise RuntimeError(f"no valid dunce cap triangulation for m={m} with q in {list(candidates)}")


def _dunce_gate(cx: SimplicialComplex, m: int) -> bool:
    h = [integral_cohomology(cx, k) for k in range(0, 3)]
    return (
        h[0].is_zero()
        and h[1].is_zero()
        and h[2].free_rank == 0
        and h[2].invariant_factors == (m,)
    )


def random_complex(n: int, d: int, density, seed: int) -> SimplicialComplex:
    """Seeded random complex on ``1..n``.

    Every vertex is a face.  Each subset of size ``min(d + 1, n)`` is then
    kept when ``random.Random(seed).random() < density``, drawing once per
    subset in lexicographic order; the complex is the downward closure.
    """
    if n < 1:
        raise ValueError("random_complex needs n >= 1")
    density = Fraction(density)
    if not 0 <= density <= 1:
        raise ValueError("density must lie in [0, 1]")
    rng = random.Random(seed)
    size = max(1, min(d + 1, n))
    chosen = [s for s in combinations(range(1, n + 1), size) if rng.random() < density]
    singles = [(v,) for v in range(1, n + 1)]
    return from_facets(
        n, chosen + singles,
        {"generator": "random", "n": n, "d": d, "density": str(density), "seed": seed},
    )


def from_spec(spec: str) -> SimplicialComplex:
    """Build a complex from ``name[:p1,p2,...]``.

    Names: ``rp2``, ``dunce:m[,q]``, ``cycle:n``, ``simplex-boundary:n``,
    ``simplex:n``, ``random:n,d,density,seed``.
    """
    name, _, rest = spec.partition(":")
    args = [a.strip() for a in rest.split(",")] if rest.strip() else []
    try:
        if name == "rp2" and not args:
            return rp2_six_vertex()
        if name == "dunce" and len(args) in (1, 2):
            return dunce_cap(int(args[0]), int(args[1]) if len(args) == 2 else None)
        if name == "cycle" and len(args) == 1:
            return cycle(int(args[0]))
        if name == "simplex-boundary" and len(args) == 1:
            return simplex_boundary(int(args[0]))
        if name == "simplex" and len(args) == 1:
            return full_simplex(int(args[0]))
        if name == "random" and len(args) == 4:
            return random_complex(int(args[0]), int(args[1]), Fraction(args[2]), int(args[3]))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad generator spec {spec!r}: {exc}") from exc
    raise ValueError(f"unknown generator spec {spec!r}")
