"""Graph spectra and local spectra from quotient matrices of equitable partitions."""

from .errors import (
    AmbiguousClusteringError,
    DisconnectedGraphError,
    GraphFormatError,
    NotEquitableError,
    NumericalError,
    WalkCountOverflowError,
)
from .graph import (
    Graph,
    distances_from,
    format_edge_list,
    format_graph6,
    is_connected,
    is_regular,
    parse_edge_list,
    parse_graph6,
    walk_counts,
)
from .partition import (
    Partition,
    QuotientMatrix,
    characteristic_matrix,
    coarsest_equitable_refinement,
    distance_partition,
    find_witness,
    is_equitable,
    quotient_matrix,
    quotient_walk_counts,
    verify_commutation,
    vertex_partition,
)
from .spectra import (
    EigenDecomposition,
    IdempotentSet,
    QuotientEigen,
    Spectrum,
    dedup_eigenvalues,
    idempotents_from_eigen,
    lagrange_idempotent,
    quotient_eigen,
    symmetric_eigen,
)
from .localspec import (
    CrossedMultiplicityTable,
    LocalSpectrum,
    crossed_direct_oracle,
    crossed_table,
    crossed_via_lagrange,
    crossed_via_quotient_idempotents,
    distance_regular_multiplicity,
    graph_eigenvalues,
    is_walk_regular,
    local_spectra,
    local_spectrum,
    oracle_spectrum,
    reconstruct_spectrum,
    simple_eigenvalue_multiplicity,
    vertex_quotient,
    walk_regular_multiplicities,
    walks_from_crossed,
)

__version__ = "0.1.0"
