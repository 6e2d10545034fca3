"""clutterkit: exact deciders with certificates for edge ideals of clutters.

Symbolic vs ordinary powers of squarefree monomial ideals, Konig and packing
properties of clutters, the graph correspondence for (n-2)-uniform clutters,
and 0/1 covering/packing LP duality.
"""

from .clutters import (
    Clutter,
    FailingMinor,
    IncidenceMatrix,
    PackingReport,
    TRIVIAL,
    contraction,
    cover_number,
    deletion,
    edge_ideal,
    extend,
    has_koenig,
    has_packing,
    incidence_matrix,
    make_clutter,
    matching_number,
    min_vertex_covers,
    minor,
)
from .errors import DimensionMismatch, ResourceLimitExceeded
from .graphs import (
    Graph,
    GraphClass,
    REFERENCE_GRAPHS,
    associated_graph,
    classify_graph,
    clutter_of_graph,
    complementary_edge_ideal,
    enumerate_graphs_upto_iso,
    enumeration_jsonl,
    graphs_isomorphic,
    make_graph,
    primary_decomposition_cx,
)
from .lp import (
    BASE_MATRICES,
    LpReport,
    duality_gap_search,
    extend_matrix,
    phi,
    psi,
    solve_lp,
    structural_mfmc_check,
)
from .monomials import (
    Monomial,
    MonomialIdeal,
    PrimeSupport,
    SimisReport,
    contains_monomial,
    ideals_equal,
    intersect,
    is_simis,
    minimal_primes,
    minimalize,
    multiply,
    power,
    prime_power_contains,
    symbolic_power,
)
from .verify import TheoremReport, TheoremRow, verify_theorem

__version__ = "0.1.0"
