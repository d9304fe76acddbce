import json
from itertools import combinations

import pytest

from bockstein.cohomology import bockstein, integral_cohomology
from bockstein.generators import cycle, dunce_cap, full_simplex, simplex_boundary
from bockstein.simplicial import from_facets
from bockstein.stanley_reisner import (
    bockstein_prime_sweep,
    candidate_primes,
    graded_cech_complex,
    hochster_dimension,
    hochster_table,
    local_bockstein_is_zero,
    prime_power,
    sr_ideal,
)
from conftest import seeded_complexes, seeded_torsion_complexes
import properties as P


def test_sr_ideal(rp2):
    assert len(sr_ideal(rp2).generators) == 10
    assert sr_ideal(full_simplex(5)).generators == ()
    assert sr_ideal(simplex_boundary(4)).generators == ((1, 2, 3, 4),)
    assert sr_ideal(rp2).monomials()[0] == "x1*x2*x3"
    with pytest.raises(ValueError):
        sr_ideal(from_facets(0, [[]]))


def test_prime_power():
    assert prime_power(2) == (2, 1)
    assert prime_power(27) == (3, 3)
    for bad in (1, 6, 12, 0):
        with pytest.raises(ValueError):
            prime_power(bad)


def test_hochster_examples(rp2):
    assert hochster_dimension(rp2, 2, 3, ()) == 1
    assert hochster_dimension(rp2, 2, 3, (1,)) == 1
    assert hochster_dimension(rp2, 2, 3, (1, 2, 3)) == 0
    assert hochster_dimension(rp2, 3, 3, ()) == 0


def test_rp2_cohen_macaulay_for_odd_primes(rp2):
    for p in (3, 5, 7):
        for k in range(-1, 9):
            for tau in rp2.all_faces():
                dim = hochster_dimension(rp2, p, k, tau)
                if k != 3:
                    assert dim == 0


def test_hochster_table(rp2):
    table = hochster_table(rp2, 2, 3)
    assert table.rows[0].tau == () and table.rows[0].orders == (2,)
    assert len(table.rows) == len(rp2.all_faces())
    assert [r.tau for r in hochster_table(rp2, 2, 3, [(1, 2, 3), (2,)]).rows] == [(2,)]
    json.dumps(table.to_json())


def test_cech_at_zero_matches_simplicial(rp2):
    cech = graded_cech_complex(rp2, [0] * 6)
    for k in range(0, 7):
        h = integral_cohomology(rp2, k - 1)
        assert cech.integral_cohomology(k) == (h.free_rank, h.invariant_factors)


def test_cech_shift_on_vertex_support(rp2):
    cech = graded_cech_complex(rp2, [-1, 0, 0, 0, 0, 0])
    five_cycle = cycle(5)
    for k in range(0, 7):
        h = integral_cohomology(five_cycle, k - 2)
        assert cech.integral_cohomology(k) == (h.free_rank, h.invariant_factors)


def test_cech_nonface_support_is_zero(rp2):
    cech = graded_cech_complex(rp2, [-1, -1, -2, 0, 0, 0])
    assert all(len(b) == 0 for b in cech.bases)


def test_cech_rejects_positive_degrees(rp2):
    with pytest.raises(ValueError):
        graded_cech_complex(rp2, [1, 0, 0, 0, 0, 0])
    with pytest.raises(ValueError):
        graded_cech_complex(rp2, [0, 0])


@pytest.mark.parametrize("cx", [c for c in seeded_complexes(50) if c.n <= 7] + seeded_torsion_complexes(4))
def test_hochster_oracle(cx):
    for p in (2, 3):
        P.check_hochster_oracle(cx, p, max_support=None if cx.n <= 6 else 2)


@pytest.mark.parametrize("i, cx", list(enumerate(seeded_complexes(20))))
def test_degree_support_independence(i, cx):
    P.check_support_only(cx, P.new_rng(i))


def test_local_bockstein_rp2(rp2):
    rep = local_bockstein_is_zero(rp2, 2, 3)
    assert not rep.is_zero
    assert [w.tau for w in rep.witnesses] == [()]
    assert rep.witnesses[0].link_degree == 1
    assert rep.torsion_certificate() == "H^4_a(R) has nonzero 2-torsion"
    assert rep.to_json() == {
        "k": 3, "modulus": 2, "is_zero": False,
        "witnesses": [{"tau": [], "link_degree": 1}],
        "prime_power_analogue": False,
    }
    for p in (3, 5, 7):
        assert all(local_bockstein_is_zero(rp2, p, k).is_zero for k in range(-3, 10))


def test_local_bockstein_rejects_composite(rp2):
    with pytest.raises(ValueError):
        local_bockstein_is_zero(rp2, 6, 3)


def test_local_bockstein_four_fold_cap():
    cx = dunce_cap(4)
    assert local_bockstein_is_zero(cx, 2, cx.n - 3).is_zero
    rep = local_bockstein_is_zero(cx, 4, cx.n - 3)
    assert not rep.is_zero and rep.prime_power_analogue
    assert rep.torsion_certificate() is None


def test_local_bockstein_parallel_matches_serial():
    cx = dunce_cap(6)
    serial = local_bockstein_is_zero(cx, 2, cx.n - 3)
    assert local_bockstein_is_zero(cx, 2, cx.n - 3, workers=2) == serial


def test_local_bockstein_vanishes_beyond_n(rp2):
    for k in range(rp2.n + 1, rp2.n + 4):
        assert local_bockstein_is_zero(rp2, 2, k).is_zero


def test_void_complex_local_bockstein():
    assert local_bockstein_is_zero(from_facets(3, []), 2, 1).is_zero


def test_prime_sweeps(rp2):
    assert bockstein_prime_sweep(rp2, 3) == [2]
    cx = dunce_cap(6)
    assert bockstein_prime_sweep(cx, cx.n - 3) == [2, 3]
    assert bockstein_prime_sweep(cx, cx.n - 3, workers=2) == [2, 3]
    assert bockstein_prime_sweep(dunce_cap(4), dunce_cap(4).n - 3) == []
    for k in range(-2, 8):
        assert bockstein_prime_sweep(simplex_boundary(5), k) == []


@pytest.mark.parametrize("cx", seeded_torsion_complexes(12) + [dunce_cap(6), dunce_cap(10)])
def test_sweep_soundness(cx):
    cands = candidate_primes(cx)
    for k in range(cx.n - 4, cx.n - 1):
        found = bockstein_prime_sweep(cx, k)
        for p in cands:
            assert local_bockstein_is_zero(cx, p, k).is_zero == (p not in found)
        # primes outside the candidate set never show up
        for p in (2, 3, 5, 7):
            if p not in cands:
                assert local_bockstein_is_zero(cx, p, k).is_zero


def test_simplicial_bockstein_transfers_to_local():
    # a nonzero simplicial Bockstein in degree j forces a nonzero local one at n - j - 2
    for cx in seeded_torsion_complexes(10):
        for j in range(-1, 3):
            if not bockstein(cx, j, 2).is_zero:
                assert not local_bockstein_is_zero(cx, 2, cx.n - j - 2).is_zero
