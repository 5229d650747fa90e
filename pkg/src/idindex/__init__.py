"""Distance-based vertex identification in connected graphs.

A rank assignment gives every vertex an integer; vertex v's string lists,
for each distance i up to the diameter, the total rank sitting at distance
exactly i from v.  This package computes the minimum number of distinct
rank values needed to make all strings differ (``id_index_exact``), the
minimum red set whose distance counts do the same (``id_number_exact``),
closed-form optimal assignments for several graph families, and the
structural analysis (twin classes, distance profiles) behind the bounds.
"""

from .graphs import (
    DisconnectedError,
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    build_graph,
    is_connected,
    parse_edge_list,
)
from .families import FamilySpec, VertexLayout, generate, parse_family_spec
from .strings_codes import (
    RankAssignment,
    RedWhiteColoring,
    code_table,
    first_collision,
    is_distinguishing,
    is_id_coloring,
    string_table,
)
from .structure import (
    DistanceProfile,
    TupletClass,
    TupletClasses,
    distance_profile,
    idi_lower_bound,
    multipartite_binomial_bound,
    tuplet_classes,
)
from .solvers import (
    IdIndexCertificate,
    IdNumberResult,
    Partition,
    SearchLimits,
    certificate_ranks,
    geometric_pool,
    greedy_upper_bound,
    id_index_exact,
    id_index_oracle,
    id_number_exact,
    pair_profiles,
    partition_distinguishes,
    partition_of_ranks,
    restricted_growth_strings,
    to_restricted_growth,
)
from .constructions import (
    affine_transform,
    coloring_to_ranks,
    construct_assignment,
    expected_id_index,
    normalize_two_valued,
    ranks_to_coloring,
    universal_assignment,
)

__all__ = [
    "DisconnectedError",
    "DistanceMatrix",
    "Graph",
    "all_pairs_distances",
    "build_graph",
    "is_connected",
    "parse_edge_list",
    "FamilySpec",
    "VertexLayout",
    "generate",
    "parse_family_spec",
    "RankAssignment",
    "RedWhiteColoring",
    "code_table",
    "first_collision",
    "is_distinguishing",
    "is_id_coloring",
    "string_table",
    "DistanceProfile",
    "TupletClass",
    "TupletClasses",
    "distance_profile",
    "idi_lower_bound",
    "multipartite_binomial_bound",
    "tuplet_classes",
    "IdIndexCertificate",
    "IdNumberResult",
    "Partition",
    "SearchLimits",
    "certificate_ranks",
    "geometric_pool",
    "greedy_upper_bound",
    "id_index_exact",
    "id_index_oracle",
    "id_number_exact",
    "pair_profiles",
    "partition_distinguishes",
    "partition_of_ranks",
    "restricted_growth_strings",
    "to_restricted_growth",
    "affine_transform",
    "coloring_to_ranks",
    "construct_assignment",
    "expected_id_index",
    "normalize_two_valued",
    "ranks_to_coloring",
    "universal_assignment",
]

__version__ = "0.1.0"
