"""rectagraph-kit - rectagraphs, binary codes and permutation groups.

Builds coset graphs of binary linear codes, recovers codes from rectagraphs
through their covering by the n-cube, and certifies locally triangular and
locally rank 3 structure with an exact permutation group engine.
"""

__version__ = "0.1.0"

from ._core import KitConfiguration, Limits, RectakitError
from .gf2code import BitVector, LinearCode, code_from_rows, golay23, golay24
from .graph import CayleyGraph, ExplicitGraph, Graph, coset_graph, halved_graphs, hypercube
from .permgroup import AffineAction, PermGroup, Permutation, affine_action, schreier_sims
from .rect import build_covering, kernel_report, locally_rank3_check, reconstruct_code, rectagraph_over

__all__ = [
    "__version__",
    "KitConfiguration",
    "Limits",
    "RectakitError",
    "BitVector",
    "LinearCode",
    "code_from_rows",
    "golay23",
    "golay24",
    "Graph",
    "ExplicitGraph",
    "CayleyGraph",
    "coset_graph",
    "halved_graphs",
    "hypercube",
    "Permutation",
    "PermGroup",
    "AffineAction",
    "affine_action",
    "schreier_sims",
    "build_covering",
    "kernel_report",
    "reconstruct_code",
    "rectagraph_over",
    "locally_rank3_check",
]
