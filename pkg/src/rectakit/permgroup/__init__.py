"""Permutation groups: stabilizer chains, induced actions, the affine coset
action and a registry of verified generator sets."""

from .permutation import Permutation
from .schreier_sims import PermGroup, schreier_sims, order, contains, stabilizer
from .actions import (
    FiniteAction,
    natural_action,
    pair_action,
    subset_action,
    subsets,
    subset_rank,
    induced_group,
    orbit_labels,
    orbits,
    is_transitive,
    orbit_count_on_ordered_pairs,
    rank_on,
    is_k_homogeneous,
    is_k_transitive,
    transitivity_degree,
    vertex_orbits,
    edge_orbit_count,
    is_edge_transitive,
)
from .affine import AffineMap, AffineAction, affine_action
from .registry import (
    REGISTRY,
    registry_group,
    m24_gens,
    m23_gens,
    m12_gens,
    m11_gens,
    mathieu_gens,
    pgl_gamma_2_8_gens,
    s_n_gens,
    a_n_gens,
    a4_on_k4,
    s4_on_k4,
    k_n_multipartite_groups,
)
from .io import read_generators, write_generators, parse_generators, format_generators

__all__ = [
    # Permutations and chains
    "Permutation",
    "PermGroup",
    "schreier_sims",
    "order",
    "contains",
    "stabilizer",
    # Actions
    "FiniteAction",
    "natural_action",
    "pair_action",
    "subset_action",
    "subsets",
    "subset_rank",
    "induced_group",
    "orbit_labels",
    "orbits",
    "is_transitive",
    "orbit_count_on_ordered_pairs",
    "rank_on",
    "is_k_homogeneous",
    "is_k_transitive",
    "transitivity_degree",
    "vertex_orbits",
    "edge_orbit_count",
    "is_edge_transitive",
    # Affine action
    "AffineMap",
    "AffineAction",
    "affine_action",
    # Registry
    "REGISTRY",
    "registry_group",
    "m24_gens",
    "m23_gens",
    "m12_gens",
    "m11_gens",
    "mathieu_gens",
    "pgl_gamma_2_8_gens",
    "s_n_gens",
    "a_n_gens",
    "a4_on_k4",
    "s4_on_k4",
    "k_n_multipartite_groups",
    # I/O
    "read_generators",
    "write_generators",
    "parse_generators",
    "format_generators",
]
