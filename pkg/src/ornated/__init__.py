"""Ornated directed multigraphs built from ordered integer strings."""
from .graph import (
    OrnatedGraph,
    arc_count,
    arcless,
    build,
    build_generalized,
    degree_from_matrix,
    degrees,
    graph_sum,
    relative_degrees,
    underlying_matrix,
)
from .kyle import (
    DegreeProfile,
    central_cluster,
    degree_sequence,
    generalized_kyle,
    kyle,
    max_degree,
    min_degree,
)
from .lab import ConjectureReport, ResourceError, check_conjecture_conditions, is_symmetric_digraph
from .ostring import (
    OrderedString,
    canonical_interleave,
    identical_string_count,
    isomorphic_string_count,
    parity_split,
    reduce_zeros,
    reduced_degree_chain,
)
from .ratanang import NotOrnated, RecoveryResult, is_kyle, recover, string_length_from_matrix

__version__ = "0.1.0"
