"""Recognition of triangular graphs T_n and of locally triangular graphs."""

from __future__ import annotations

import logging
import math
from typing import Dict, List, Optional, Sequence

import numpy as np

from .._core import DisconnectedError
from .base import Graph
from .cliques import maximal_cliques
from .derived import induced_neighborhood
from .distances import connected_components, is_connected
from .isomorphism import isomorphic
from .models import TriangularLabeling

logger = logging.getLogger(__name__)


def _triangular_order(vertices: int) -> Optional[int]:
    """n with n(n-1)/2 == vertices, if any."""
    root = math.isqrt(1 + 8 * vertices)
    if root * root != 1 + 8 * vertices or (1 + root) % 2:
        return None
    return (1 + root) // 2


def labeling_is_valid(g: Graph, labels: Sequence[tuple[int, int]]) -> bool:
    """Distinct pairs, and u ~ v exactly when the pairs of u and v share one point."""
    if len(labels) != g.order or len(set(labels)) != g.order:
        return False
    if g.order == 0:
        return True
    pairs = np.array(labels, dtype=np.int64)
    a, b = pairs[:, 0], pairs[:, 1]
    shared = (a[:, None] == a[None, :]).astype(np.int8) + (a[:, None] == b[None, :]) + (b[:, None] == a[None, :]) + (b[:, None] == b[None, :])
    return bool(np.array_equal(shared == 1, g.to_explicit().adjacency_matrix()))


def _small_labeling(g: Graph, n: int) -> Optional[List[tuple[int, int]]]:
    if n == 2:
        return [(1, 2)]
    if n == 3:
        return [(1, 2), (1, 3), (2, 3)]
    # T_4 is the octahedron: non-adjacent vertices carry complementary pairs
    eg = g.to_explicit()
    if eg.valency != 4:
        return None
    adj = eg.adjacency_matrix()
    partner = {}
    for u in range(6):
        others = [v for v in range(6) if v != u and not adj[u, v]]
        if len(others) != 1:
            return None
        partner[u] = others[0]
    labels: Dict[int, tuple[int, int]] = {}
    choices = [((1, 2), (3, 4)), ((1, 3), (2, 4)), ((2, 3), (1, 4))]
    for u in range(6):
        if u in labels:
            continue
        first, second = choices[len(labels) // 2]
        labels[u] = first
        labels[partner[u]] = second
    return [labels[u] for u in range(6)]


def recognize_triangular(g: Graph) -> Optional[TriangularLabeling]:
    """Return n and a labeling by 2-subsets of [n] if g is isomorphic to T_n, else None.

    For n >= 5 the maximal cliques of size n-1 are the stars of the points; each
    vertex lies on exactly two of them and is labelled by that pair.
    """
    n = _triangular_order(g.order)
    if n is None or n < 2:
        return None
    if g.valency != 2 * (n - 2):
        return None
    if n <= 4:
        labels = _small_labeling(g, n)
    else:
        stars = [c for c in maximal_cliques(g, min_size=n - 1) if len(c) == n - 1]
        if len(stars) != n:
            return None
        on: Dict[int, List[int]] = {}
        for point, star in enumerate(stars, start=1):
            for v in star:
                on.setdefault(v, []).append(point)
        if len(on) != g.order or any(len(points) != 2 for points in on.values()):
            return None
        labels = [(on[v][0], on[v][1]) for v in range(g.order)]
    if labels is None or not labeling_is_valid(g, labels):
        return None
    return TriangularLabeling(n=n, labels=labels)


def _local_vertices(g: Graph) -> Sequence[int]:
    if not is_connected(g):
        raise DisconnectedError(len(connected_components(g)))
    return [0] if g.translation_invariant else range(g.order)


def local_labelings(g: Graph) -> Optional[Dict[int, TriangularLabeling]]:
    """Triangular labelings of Γ(u), keyed by u, when they exist for a common n.

    Translation-invariant graphs are inspected at vertex 0 only.
    """
    found: Dict[int, TriangularLabeling] = {}
    common: Optional[int] = None
    for u in _local_vertices(g):
        labeling = recognize_triangular(induced_neighborhood(g, u))
        if labeling is None or (common is not None and labeling.n != common):
            logger.debug("neighbourhood of %d is not T_%s", u, common)
            return None
        common = labeling.n
        found[u] = labeling
    return found


def is_locally_triangular(g: Graph) -> Optional[int]:
    """The common n when every neighbourhood is T_n, else None."""
    labelings = local_labelings(g)
    if not labelings:
        return None
    return next(iter(labelings.values())).n


def is_locally(g: Graph, model: Graph) -> bool:
    """True when every vertex neighbourhood is isomorphic to ``model``."""
    return all(isomorphic(induced_neighborhood(g, u), model) is not None for u in _local_vertices(g))
