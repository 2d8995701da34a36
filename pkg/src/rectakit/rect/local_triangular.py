"""The bipartite rectagraph over a locally triangular graph.

If every Γ(u) is T_n, the maximal cliques of size n through u are u together
with a star of Γ(u): the neighbours whose labels contain one point p. Joining
each vertex to the n-cliques containing it gives a bipartite rectagraph whose
halved graph on the first part is the input.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Optional

import numpy as np

from .._core import HypothesesFailError, IntArray, KitConfiguration, NotLocallyTriangularError
from ..graph import (
    CayleyGraph,
    ExplicitGraph,
    Graph,
    TriangularLabeling,
    distance_profile,
    hypercube,
    induced_neighborhood,
    is_bipartite,
    is_rectagraph,
    recognize_triangular,
)

logger = logging.getLogger(__name__)


def _labeling_at(g: Graph, u: int) -> TriangularLabeling:
    labeling = recognize_triangular(induced_neighborhood(g, u))
    if labeling is None:
        raise NotLocallyTriangularError(u)
    return labeling


def _cliques_at(g: Graph, u: int, labeling: TriangularLabeling) -> IntArray:
    """The n cliques {u} ∪ star_p, one sorted row per point p of the labeling."""
    nbrs = g.neighbors(u)
    rows = []
    for p in range(1, labeling.n + 1):
        star = [int(nbrs[k]) for k, pair in enumerate(labeling.labels) if p in pair]
        rows.append(sorted([u] + star))
    return np.array(rows, dtype=np.int64)


def vertex_cliques(g: Graph) -> tuple[int, IntArray]:
    """The common n and every n-clique of the form {u} ∪ star, one sorted row each."""
    if isinstance(g, CayleyGraph):
        labeling = _labeling_at(g, 0)
        local = _cliques_at(g, 0, labeling)
        everything = (np.arange(g.order, dtype=np.int64)[:, None, None] ^ local[None, :, :]).reshape(-1, local.shape[1])
        return labeling.n, np.unique(np.sort(everything, axis=1), axis=0)
    n: Optional[int] = None
    parts: List[IntArray] = []
    for u in range(g.order):
        labeling = _labeling_at(g, u)
        if n is not None and labeling.n != n:
            raise NotLocallyTriangularError(u)
        n = labeling.n
        parts.append(_cliques_at(g, u, labeling))
    if n is None:
        raise NotLocallyTriangularError(0)
    return n, np.unique(np.concatenate(parts), axis=0)


def rectagraph_over(g: Graph, config: Optional[KitConfiguration] = None) -> Graph:
    """Π with parts V(g) (ids 0..N-1) and the n-cliques (ids N..N+B-1), u ~ B iff u ∈ B."""
    n, cliques = vertex_cliques(g)
    if n <= 4:
        logger.info("local graphs are T_%d; the rectagraph is Q%d", n, n)
        return hypercube(n)
    order = g.order
    members = cliques.ravel()
    owners = np.repeat(np.arange(cliques.shape[0], dtype=np.int64) + order, cliques.shape[1])
    pi = ExplicitGraph.from_edges(order + cliques.shape[0], np.stack([members, owners], axis=1), name=f"Pi({g.name})" if g.name else "")
    checks: Dict[str, bool] = {
        "rectagraph": bool(is_rectagraph(pi)),
        "bipartite": is_bipartite(pi),
    }
    profile = distance_profile(pi, 0, max_distance=3)
    checks["c3"] = profile.depth < 3 or profile.c_values[3] == [3]
    if not all(checks.values()):
        raise HypothesesFailError("the clique graph is not a bipartite rectagraph with c_3 = 3", {k: v for k, v in checks.items()})
    logger.info("rectagraph over %r: %d vertices, %d cliques, valency %d", g, order, cliques.shape[0], n)
    return pi
