import random
from fractions import Fraction
from itertools import combinations

import pytest

from bockstein.generators import RP2_FACETS, cycle, dunce_cap, random_complex, rp2_six_vertex, simplex_boundary
from bockstein.simplicial import from_facets

DENSITIES = [Fraction(1, 4), Fraction(2, 5), Fraction(1, 2), Fraction(3, 5), Fraction(3, 4)]


def seeded_complexes(count=200, max_n=8):
    """Deterministic corpus of random complexes with 4..max_n vertices."""
    out = []
    for seed in range(count):
        n = 4 + seed % (max_n - 3)
        d = 1 + (seed // 5) % 3
        density = DENSITIES[(seed // 15) % len(DENSITIES)]
        out.append(random_complex(n, d, density, seed))
    return out


def seeded_torsion_complexes(count=60):
    """RP^2 with seeded random extra faces on up to 8 vertices.

    Plain random complexes this small are almost always torsion-free, so
    this family keeps the Bockstein properties from holding vacuously.
    """
    out = []
    for seed in range(count):
        rng = random.Random(1000 + seed)
        n = 6 + seed % 3
        extra = [
            s for size in (2, 3) for s in combinations(range(1, n + 1), size)
            if rng.random() < 0.08 * (size == 3) + 0.15 * (size == 2)
        ]
        out.append(from_facets(n, RP2_FACETS + extra + [(v,) for v in range(1, n + 1)]))
    return out


def fixture_complexes():
    return [
        rp2_six_vertex(),
        dunce_cap(2),
        dunce_cap(3),
        dunce_cap(4),
        cycle(3),
        cycle(5),
        simplex_boundary(4),
        simplex_boundary(5),
        from_facets(3, [[1, 2], [1, 3]]),
        from_facets(0, [[]]),
        from_facets(0, []),
    ]


@pytest.fixture(scope="session")
def rp2():
    return rp2_six_vertex()


@pytest.fixture(scope="session")
def hollow_triangle():
    return from_facets(3, [[1, 2], [2, 3], [1, 3]])


ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def acceptance_log(request):
    return request.config.stash.setdefault(ACCEPTANCE, [])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
