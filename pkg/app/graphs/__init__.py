"""
Distance-Residual Graph Module

Distance partitions, residual graphs, graph products and the closed-form
residual theorems with their randomized verifier
"""
from .types import (
    DistresError,
    GraphError,
    DisconnectedGraphError,
    Graph6Error,
    CatalogError,
    TheoremPreconditionError,
    Graph,
    VertexSet,
    IsoCertificate,
    OrbitPartition,
    DistanceSequence,
    DistancePartition,
    ResidualResult,
    ProductKind,
    WalkLengthProfile,
    TheoremId,
    TrialFailure,
    VerificationReport,
    CatalogEntry,
)
from .core import (
    induced_subgraph,
    is_connected,
    components,
    bipartition,
    line_graph,
    are_isomorphic,
    automorphism_orbits,
    is_vertex_transitive,
    is_edge_transitive,
    is_semisymmetric,
    is_regular,
    degree_sequence,
    disjoint_union,
)
from .metrics import (
    bfs_distances,
    distance,
    distance_partition,
    distance_sequence,
    residual,
    vertex_residual,
    edge_residual,
    growth_polynomial,
    is_growth_regular,
)
from .products import (
    product,
    product_many,
    product_id,
    coordinates,
    product_root,
    walk_length_profile,
    direct_distance,
)
from .graph6 import parse_graph6, serialize_graph6, read_graph6_file, write_graph6_file
from .catalog import named, from_lcf, entry, list_entries
from .export import to_dot, to_networkx, from_networkx

__all__ = [
    "DistresError",
    "GraphError",
    "DisconnectedGraphError",
    "Graph6Error",
    "CatalogError",
    "TheoremPreconditionError",
    "Graph",
    "VertexSet",
    "IsoCertificate",
    "OrbitPartition",
    "DistanceSequence",
    "DistancePartition",
    "ResidualResult",
    "ProductKind",
    "WalkLengthProfile",
    "TheoremId",
    "TrialFailure",
    "VerificationReport",
    "CatalogEntry",
    "induced_subgraph",
    "is_connected",
    "components",
    "bipartition",
    "line_graph",
    "are_isomorphic",
    "automorphism_orbits",
    "is_vertex_transitive",
    "is_edge_transitive",
    "is_semisymmetric",
    "is_regular",
    "degree_sequence",
    "disjoint_union",
    "bfs_distances",
    "distance",
    "distance_partition",
    "distance_sequence",
    "residual",
    "vertex_residual",
    "edge_residual",
    "growth_polynomial",
    "is_growth_regular",
    "product",
    "product_many",
    "product_id",
    "coordinates",
    "product_root",
    "walk_length_profile",
    "direct_distance",
    "parse_graph6",
    "serialize_graph6",
    "read_graph6_file",
    "write_graph6_file",
    "named",
    "from_lcf",
    "entry",
    "list_entries",
    "to_dot",
    "to_networkx",
    "from_networkx",
]
