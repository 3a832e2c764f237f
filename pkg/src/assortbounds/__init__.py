"""Attainable range of binary assortativity under network constraints."""

__version__ = "0.1.0"

from .bounds import (
    AssortativityRange,
    DegreePartition,
    EdgeCountBounds,
    assortativity_lower,
    assortativity_range,
    assortativity_upper,
    edge_count_bounds,
    m00_lower,
    m00_upper,
    m10_lower,
    m10_upper,
    m11_lower,
    m11_upper,
    normalize_assortativity,
)
from .explorer import (
    ExplorationReport,
    HeuristicConfig,
    enumerate_metadata_space,
    permutation_pvalue,
    permutation_test,
    rewire_graph_space,
    sample_permutations,
    swap_heuristic,
)
from .graph import (
    DegreeSequence,
    EdgeCounts,
    Graph,
    MetadataAssignment,
    degree_sequence,
    edge_counts,
    partition_degree_sums,
    validate_graph,
)
from .io import load_fixture, load_graph
from .mixing import (
    ContingencyTable,
    SegregationResult,
    assortativity,
    assortativity_from_contingency,
    assortativity_from_counts,
    contingency_from_counts,
    freeman_segregation,
    newman_naive_min,
    phi_bounds,
    phi_coefficient,
)

