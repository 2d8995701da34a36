"""Hypercube coverings of rectagraphs, kernel codes, locally triangular
graphs and locally rank 3 certificates."""

from .models import CoveringMap, CodeSummary, TwistEntry, KernelReport, LocalOrbitRecord, LocalRank3Certificate
from .covering import check_hypotheses, build_covering, verify_covering, covering_from_images
from .kernel import (
    kernel_report,
    coset_isomorphism,
    reconstruct_code,
    kernel_invariance_check,
    contains_even_weight_code,
    twisted_translation_partition,
    quotient_covering,
)
from .local_triangular import vertex_cliques, rectagraph_over
from .local_rank3 import (
    GroupLike,
    locally_rank3_check,
    two_arc_orbit_check,
    local_action,
    four_homogeneous_local_check,
    natural_local_action_check,
    five_transitive_local_check,
    coset_graph_automorphism_check,
)

__all__ = [
    # Models
    "CoveringMap",
    "CodeSummary",
    "TwistEntry",
    "KernelReport",
    "LocalOrbitRecord",
    "LocalRank3Certificate",
    # Coverings
    "check_hypotheses",
    "build_covering",
    "verify_covering",
    "covering_from_images",
    # Kernels
    "kernel_report",
    "coset_isomorphism",
    "reconstruct_code",
    "kernel_invariance_check",
    "contains_even_weight_code",
    "twisted_translation_partition",
    "quotient_covering",
    # Locally triangular graphs
    "vertex_cliques",
    "rectagraph_over",
    # Local actions
    "GroupLike",
    "locally_rank3_check",
    "two_arc_orbit_check",
    "local_action",
    "four_homogeneous_local_check",
    "natural_local_action_check",
    "five_transitive_local_check",
    "coset_graph_automorphism_check",
]
