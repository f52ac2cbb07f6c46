"""Minimal codewords of binary linear codes: computation, bounds and searches."""

from .bounds import (
    BoundsCell,
    GTable,
    abch_lower,
    agrell_upper,
    best_bounds,
    bounds_table,
    closure_lower,
    graph_cycle_upper,
    matroid_upper,
    random_coding_lower,
    recursion_upper_table,
    refined_trivial_upper,
    trivial_upper,
)
from .codes import (
    Codeword,
    LinearCode,
    MinimalSet,
    count_minimal,
    decompose_into_minimal,
    direct_sum,
    enumerate_codewords,
    extend_zero_column,
    extended_hamming,
    is_intersecting,
    is_minimal,
    min_distance,
    minimal_codewords,
    minimal_codewords_oracle,
    parity_code,
    permute_coordinates,
    repetition_code,
    universe_code,
)
from .cyclegraph import (
    Graph,
    count_elementary_cycles,
    cycle_code,
    incidence_matrix,
    verify_cycle_correspondence,
)
from .gf2 import BitMatrix, BitVec, kernel_basis, parity_check_from_generator, rank, rref, systematic_form
from .search import (
    SearchBudget,
    SearchCertificate,
    compute_d,
    compute_g,
    exhaustive_max_M,
    heuristic_max_M,
    verify_certificate,
)

__version__ = "0.1.0"
