from itertools import combinations

import pytest

from bockstein.generators import rp2_six_vertex
from bockstein.simplicial import (
    SimplicialComplex,
    coboundary_matrix,
    faces,
    from_facets,
    link,
    minimal_nonfaces,
)
from bockstein.linalg import snf
from conftest import fixture_complexes, seeded_complexes

RP2_NONFACES = [
    (1, 2, 3), (1, 2, 4), (1, 3, 5), (1, 4, 6), (1, 5, 6),
    (2, 3, 6), (2, 4, 5), (2, 5, 6), (3, 4, 5), (3, 4, 6),
]


def test_from_facets_basic(hollow_triangle):
    assert hollow_triangle.facets == ((1, 2), (1, 3), (2, 3))
    assert hollow_triangle.kind == "proper"
    assert from_facets(3, [[1, 2], [1], [1, 2]]).facets == ((1, 2),)


def test_void_and_irrelevant():
    void = from_facets(0, [])
    irr = from_facets(0, [[]])
    assert void.kind == "void" and irr.kind == "irrelevant"
    assert void != irr
    assert faces(void, -1) == []
    assert faces(irr, -1) == [()]
    assert from_facets(2, [[], [1]]).facets == ((1,),)


def test_from_facets_rejects_bad_labels():
    with pytest.raises(ValueError):
        from_facets(3, [[1, 4]])
    with pytest.raises(ValueError):
        from_facets(3, [[0, 1]])
    with pytest.raises(ValueError):
        from_facets(3, [[1, 1]])


def test_rp2_complement_of_listed_nonfaces():
    triples = [t for t in combinations(range(1, 7), 3) if t not in RP2_NONFACES]
    cx = from_facets(6, triples)
    assert cx == rp2_six_vertex()
    assert len(cx.facets) == 10
    assert cx.f_vector() == [1, 6, 15, 10]


def test_faces(hollow_triangle):
    assert faces(hollow_triangle, 1) == [(1, 2), (1, 3), (2, 3)]
    assert faces(hollow_triangle, -1) == [()]
    assert faces(hollow_triangle, 2) == []


def test_link_examples(rp2):
    assert link(rp2, ()) == rp2
    lk = link(rp2, (1,))
    # 5-cycle 2-5-4-3-6-2
    assert set(lk.facets) == {(2, 5), (4, 5), (3, 4), (3, 6), (2, 6)}
    assert link(rp2, (1, 2, 3)).kind == "void"
    assert link(rp2, (1, 2, 5)).kind == "irrelevant"


def test_coboundary_small_cases(hollow_triangle):
    irr = from_facets(0, [[]])
    assert coboundary_matrix(irr, -1).shape == (0, 1)
    edge = from_facets(2, [[1, 2]])
    assert coboundary_matrix(edge, -1).to_rows() == [[1], [1]]
    assert coboundary_matrix(edge, 0).to_rows() == [[-1, 1]]
    d0 = coboundary_matrix(hollow_triangle, 0)
    assert d0.shape == (3, 3)
    assert snf(d0).rank == 2


@pytest.mark.parametrize("cx", seeded_complexes(60) + fixture_complexes())
def test_coboundary_squares_to_zero(cx):
    for k in range(-2, cx.dim + 1):
        prod = coboundary_matrix(cx, k + 1) @ coboundary_matrix(cx, k)
        assert prod.is_zero()


def test_minimal_nonfaces_examples(rp2):
    assert minimal_nonfaces(rp2) == RP2_NONFACES
    assert minimal_nonfaces(from_facets(4, [[1, 2, 3, 4]])) == []
    sphere = from_facets(4, combinations(range(1, 5), 3))
    assert minimal_nonfaces(sphere) == [(1, 2, 3, 4)]
    with pytest.raises(ValueError):
        minimal_nonfaces(from_facets(0, [[]]))
    with pytest.raises(ValueError):
        minimal_nonfaces(from_facets(0, []))


def test_isolated_missing_vertex_is_a_generator():
    cx = from_facets(3, [[1, 2]])
    assert minimal_nonfaces(cx) == [(3,)]


@pytest.mark.parametrize("cx", [c for c in seeded_complexes(80) if c.n <= 6] + [rp2_six_vertex()])
def test_nonfaces_partition_subsets(cx):
    mins = [set(f) for f in minimal_nonfaces(cx)]
    for size in range(cx.n + 1):
        for s in combinations(range(1, cx.n + 1), size):
            assert (s in cx) == (not any(m <= set(s) for m in mins))


@pytest.mark.parametrize("cx", seeded_complexes(40))
def test_link_composition(cx):
    assert link(cx, ()) == cx
    for tau in cx.all_faces():
        lk = link(cx, tau)
        for sigma in lk.all_faces():
            assert set(sigma).isdisjoint(tau)
            assert link(lk, sigma) == link(cx, tuple(sorted(tau + sigma)))


def test_downward_closure():
    for cx in seeded_complexes(30):
        for f in cx.facets:
            for size in range(len(f) + 1):
                for s in combinations(f, size):
                    assert s in cx


def test_json_round_trip(rp2):
    assert SimplicialComplex.from_json(rp2.to_json()) == rp2
    assert SimplicialComplex.from_json({"n": 0, "facets": [[]]}).kind == "irrelevant"
    assert SimplicialComplex.from_json({"n": 0, "facets": []}).kind == "void"
    for bad in [[], {"n": 2}, {"n": -1, "facets": []}, {"n": 2, "facets": [["a"]]}, {"n": 2, "facets": [1]}]:
        with pytest.raises(ValueError):
            SimplicialComplex.from_json(bad)
