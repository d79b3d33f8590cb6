"""Long induced paths and cycles in pseudo-random regular graphs.

Sparse graph core, extremal-eigenvalue estimates, random and structured
regular graph generators, site percolation, the modified depth-first search
for induced paths and cycles, and brute-force oracles for small graphs.
"""

__version__ = "0.1.0"

from .graph import (
    ComponentLabeling,
    DuplicateEdge,
    Graph,
    GraphError,
    GraphFormatError,
    IndexOutOfRange,
    SelfLoop,
    as_vertex_array,
    build_graph,
    complete_graph,
    connected_components,
    cycle_graph,
    edges_between,
    edges_within,
    empty_graph,
    excess,
    external_neighbourhood,
    format_graph,
    induced_subgraph,
    is_induced_cycle,
    is_induced_path,
    path_graph,
    petersen_graph,
    read_graph,
    regular_degree,
    write_graph,
)
from .seeding import rng, seed_derive, splitmix64
from .spectral import (
    MixingReport,
    NoConvergence,
    NotRegular,
    SpectralReport,
    expansion_bound,
    expansion_check,
    extremal_eigenvalues,
    mixing_check,
    verify_ndl,
)
from .generators import (
    ConstructionParams,
    DegreeTooLarge,
    HNotRegular,
    Infeasible,
    LexSpectrumPrediction,
    ParityViolation,
    RejectionCapExceeded,
    SizeMismatch,
    base_degree,
    circulant,
    complement,
    construct_low_mu_graph,
    construct_short_path_graph,
    disjoint_union,
    lex_product,
    predict_lex_spectrum,
    random_regular,
)
from .percolation import (
    ComponentStats,
    ExcessReport,
    NonPositiveEpsilon,
    PercolationParams,
    component_stats,
    excess_bound_report,
    predictions,
    site_percolate,
    solve_x,
)
from .search import (
    AllRetriesFailed,
    CycleSearchResult,
    CycleSegments,
    DfsState,
    InducedCycle,
    InducedPath,
    InvariantChecker,
    InvariantViolation,
    MuCertificate,
    NoClosure,
    PathTooShort,
    check_state,
    close_cycle,
    cycle_segments,
    cycle_target,
    dfs_induced_path,
    find_long_induced_cycle,
    mu_lower_certificate,
    path_target,
    percolated_path_run,
)
from .oracle import (
    CanonicalForm,
    TooLarge,
    canonical_form,
    canonical_form_bruteforce,
    dense_spectrum,
    longest_induced_cycle_exact,
    longest_induced_path_exact,
    mu_exact,
)
