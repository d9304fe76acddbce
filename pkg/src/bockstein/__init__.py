"""Bockstein homomorphisms on simplicial cohomology and on local cohomology
of Stanley-Reisner rings over the integers, computed exactly."""

from .cohomology import (
    BocksteinMap,
    IntCohomology,
    ModCohomology,
    bockstein,
    bockstein_image,
    integral_cohomology,
    mod_cohomology,
)
from .generators import cycle, dunce_cap, from_spec, full_simplex, random_complex, rp2_six_vertex, simplex_boundary
from .linalg import IntegerMatrix, SNFDecomposition, cokernel_invariants, kernel_mod, rank_mod_p, snf, solve_mod
from .simplicial import SimplicialComplex, coboundary_matrix, faces, from_facets, link, minimal_nonfaces
from .stanley_reisner import (
    LocalBocksteinReport,
    SRIdeal,
    bockstein_prime_sweep,
    graded_cech_complex,
    hochster_dimension,
    hochster_table,
    local_bockstein_is_zero,
    sr_ideal,
)

__version__ = "0.1.0"
