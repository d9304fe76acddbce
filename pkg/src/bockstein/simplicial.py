"""Finite simplicial complexes on the vertex set ``1..n``.

A complex is stored by its facets.  Two degenerate complexes are kept apart:
the *void* complex has no faces at all, while the *irrelevant* complex
``{()}`` has only the empty face, so its reduced cohomology is ``Z`` in
degree -1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Any, Iterable, Sequence

from .linalg import IntegerMatrix

__all__ = [
    "Face",
    "SimplicialComplex",
    "from_facets",
    "faces",
    "link",
    "coboundary_matrix",
    "minimal_nonfaces",
]

Face = tuple[int, ...]


@dataclass(frozen=True)
class SimplicialComplex:
    n: int
    facets: tuple[Face, ...]
    metadata: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    @property
    def kind(self) -> str:
        if not self.facets:
            return "void"
        if self.facets == ((),):
            return "irrelevant"
        return "proper"

    @property
    def dim(self) -> int:
        """Largest face dimension; -1 for the irrelevant and -2 for the void complex."""
        if not self.facets:
            return -2
        return max(len(f) for f in self.facets) - 1

    @cached_property
    def _faces_by_dim(self) -> dict[int, list[Face]]:
        out: dict[int, set] = {}
        for f in self.facets:
            for s in range(len(f) + 1):
                out.setdefault(s - 1, set()).update(combinations(f, s))
        return {d: sorted(fs) for d, fs in out.items()}

    @cached_property
    def _face_set(self) -> frozenset:
        return frozenset(f for fs in self._faces_by_dim.values() for f in fs)

    def faces(self, d: int) -> list[Face]:
        return list(self._faces_by_dim.get(d, ()))

    def all_faces(self) -> list[Face]:
        """Every face, ordered by dimension and then lexicographically."""
        return [f for d in sorted(self._faces_by_dim) for f in self._faces_by_dim[d]]

    def face_index(self, d: int) -> dict[Face, int]:
        return {f: i for i, f in enumerate(self._faces_by_dim.get(d, ()))}

    def __contains__(self, face: Iterable[int]) -> bool:
        return tuple(sorted(face)) in self._face_set

    def f_vector(self) -> list[int]:
        """Face counts in dimensions -1, 0, 1, ..., dim."""
        return [len(self._faces_by_dim.get(d, ())) for d in range(-1, self.dim + 1)]

    def to_json(self) -> dict[str, Any]:
        return {"n": self.n, "facets": [list(f) for f in self.facets]}

    @classmethod
    def from_json(cls, obj: Any) -> "SimplicialComplex":
        if not isinstance(obj, dict) or "n" not in obj or "facets" not in obj:
            raise ValueError("complex must be an object with fields 'n' and 'facets'")
        n, facets = obj["n"], obj["facets"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise ValueError("'n' must be a non-negative integer")
        if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
            raise ValueError("'facets' must be an array of arrays")
        for f in facets:
            if not all(isinstance(v, int) and not isinstance(v, bool) for v in f):
                raise ValueError("vertex labels must be integers")
        return from_facets(n, facets)


def from_facets(n: int, lists: Iterable[Sequence[int]], metadata: dict | None = None) -> SimplicialComplex:
    """The complex generated by ``lists``; duplicates and non-maximal faces are dropped."""
    cleaned = set()
    for lst in lists:
        face = tuple(sorted(set(lst)))
        if len(face) != len(lst):
            raise ValueError(f"face {list(lst)} repeats a vertex")
        for v in face:
            if not 1 <= v <= n:
                raise ValueError(f"vertex {v} outside 1..{n}")
        cleaned.add(face)
    maximal: list[Face] = []
    for f in sorted(cleaned, key=len, reverse=True):
        fs = set(f)
        if not any(fs <= set(g) for g in maximal):
            maximal.append(f)
    return SimplicialComplex(n, tuple(sorted(maximal)), dict(metadata or {}))


def faces(cx: SimplicialComplex, d: int) -> list[Face]:
    """All ``d``-dimensional faces in lexicographic order."""
    return cx.faces(d)


def link(cx: SimplicialComplex, tau: Iterable[int]) -> SimplicialComplex:
    """``{s : s & tau = {}, s | tau in cx}``; the void complex when tau is not a face."""
    tau = tuple(sorted(tau))
    if not tau:
        return cx
    if tau not in cx:
        return SimplicialComplex(cx.n, ())
    ts = set(tau)
    return from_facets(cx.n, [tuple(v for v in f if v not in ts) for f in cx.facets if ts <= set(f)])


@lru_cache(maxsize=8192)
def coboundary_matrix(cx: SimplicialComplex, k: int) -> IntegerMatrix:
    """Reduced coboundary ``C^k -> C^{k+1}`` in the lexicographic face bases.

    The entry at ``(s | {v}, s)`` is ``(-1)**i`` where ``i`` is the position
    of ``v`` inside ``s | {v}``.
    """
    src = cx.face_index(k)
    tgt = cx.faces(k + 1)
    cols = len(src)
    entries = [0] * (len(tgt) * cols)
    for r, big in enumerate(tgt):
        for pos in range(len(big)):
            small = big[:pos] + big[pos + 1:]
            entries[r * cols + src[small]] = -1 if pos % 2 else 1
    return IntegerMatrix(len(tgt), cols, tuple(entries))


def minimal_nonfaces(cx: SimplicialComplex) -> list[Face]:
    """Inclusion-minimal subsets of ``1..n`` that are not faces."""
    if cx.kind != "proper":
        raise ValueError(f"minimal non-faces need a proper complex, got {cx.kind}")
    out = [(v,) for v in range(1, cx.n + 1) if (v,) not in cx]
    for d in range(0, cx.dim + 1):
        for f in cx.faces(d):
            for v in range(f[-1] + 1, cx.n + 1):
                cand = f + (v,)
                if cand in cx:
                    continue
                if all(cand[:i] + cand[i + 1:] in cx for i in range(len(cand))):
                    out.append(cand)
    return sorted(out, key=lambda f: (len(f), f))
