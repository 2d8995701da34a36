"""Graphs: explicit and implicit Cayley representations, constructions,
distance analysis, derived graphs and recognition."""

from .base import Graph, ExplicitGraph, CayleyGraph
from .models import DistanceProfile, RectagraphResult, TriangularLabeling
from .distances import (
    INFINITY,
    bfs_layers,
    bfs_distances,
    distance_profile,
    is_connected,
    connected_components,
    two_coloring,
    is_bipartite,
    diameter,
    girth,
    is_rectagraph,
)
from .derived import (
    VertexPartition,
    Quotient,
    coset_partition,
    induced_subgraph,
    induced_neighborhood,
    distance_k_graph,
    halved_graphs,
    bipartite_double,
    quotient_by_partition,
    component_graph,
)
# Imported before .families so the `triangular` function, not the submodule, is bound.
from .triangular import recognize_triangular, local_labelings, is_locally_triangular, is_locally, labeling_is_valid
from .families import (
    pair_index,
    pair_points,
    hypercube,
    triangular,
    complete,
    complete_multipartite,
    complement,
    petersen,
    coset_graph,
    folded_cube,
    symplectic_graph,
    sp6_minus_elliptic_quadric,
    sp6_minus_hyperbolic_quadric,
    sp6_minus_hyperplane,
    halved_cube_complement_without_antipodes,
)
from .cliques import maximal_cliques, clique_number
from .isomorphism import isomorphic, brute_force_automorphisms
from .io import format_edge_list, parse_edge_list, read_edge_list, write_edge_list, format_diagram, distance_diagram

__all__ = [
    # Representations
    "Graph",
    "ExplicitGraph",
    "CayleyGraph",
    # Models
    "DistanceProfile",
    "RectagraphResult",
    "TriangularLabeling",
    # Distances
    "INFINITY",
    "bfs_layers",
    "bfs_distances",
    "distance_profile",
    "is_connected",
    "connected_components",
    "two_coloring",
    "is_bipartite",
    "diameter",
    "girth",
    "is_rectagraph",
    # Derived graphs
    "VertexPartition",
    "Quotient",
    "coset_partition",
    "induced_subgraph",
    "induced_neighborhood",
    "distance_k_graph",
    "halved_graphs",
    "bipartite_double",
    "quotient_by_partition",
    "component_graph",
    # Families
    "pair_index",
    "pair_points",
    "hypercube",
    "triangular",
    "complete",
    "complete_multipartite",
    "complement",
    "petersen",
    "coset_graph",
    "folded_cube",
    "symplectic_graph",
    "sp6_minus_elliptic_quadric",
    "sp6_minus_hyperbolic_quadric",
    "sp6_minus_hyperplane",
    "halved_cube_complement_without_antipodes",
    # Recognition
    "maximal_cliques",
    "clique_number",
    "isomorphic",
    "brute_force_automorphisms",
    "recognize_triangular",
    "local_labelings",
    "is_locally_triangular",
    "is_locally",
    "labeling_is_valid",
    # I/O
    "format_edge_list",
    "parse_edge_list",
    "read_edge_list",
    "write_edge_list",
    "format_diagram",
    "distance_diagram",
]
