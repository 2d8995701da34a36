"""Isomorphism testing for small graphs by colour refinement and individualization.

Both graphs are refined together as one disjoint union, so a colour class is a
set of candidate images. The search individualizes one vertex per side in the
smallest non-singleton cell and backtracks; every mapping is verified edge by
edge before it is returned.
"""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING, List, Optional

import numpy as np

from .._core import BoolArray, IntArray, KitConfiguration, TooLargeError, resolve_limits
from .base import ExplicitGraph, Graph

if TYPE_CHECKING:
    from ..permgroup.permutation import Permutation
    from ..permgroup.schreier_sims import PermGroup

logger = logging.getLogger(__name__)


def _mix(values: IntArray) -> IntArray:
    """Splitmix64 finalizer applied elementwise; arrays wrap silently on overflow."""
    z = values.astype(np.uint64) + np.uint64(0x9E3779B97F4A7C15)
    z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return z ^ (z >> np.uint64(31))


class _Union:
    """Arc arrays of the disjoint union of g (vertices 0..N-1) and h (N..2N-1)."""

    def __init__(self, g: ExplicitGraph, h: ExplicitGraph) -> None:
        n = g.order
        src_g = np.repeat(np.arange(n, dtype=np.int64), g.degrees())
        src_h = np.repeat(np.arange(n, dtype=np.int64), h.degrees()) + n
        self.n = n
        self.src = np.concatenate([src_g, src_h])
        self.dst = np.concatenate([g.indices, h.indices + n])

    def refine(self, colors: IntArray) -> IntArray:
        """Split classes by the multiset of neighbour colours until stable."""
        count = int(colors.max()) + 1
        while True:
            sums = np.zeros(colors.shape[0], dtype=np.uint64)
            np.add.at(sums, self.src, _mix(colors[self.dst]))
            keys = np.stack([colors.astype(np.uint64), sums], axis=1)
            _, inverse = np.unique(keys, axis=0, return_inverse=True)
            colors = inverse.reshape(-1).astype(np.int64)
            new_count = int(colors.max()) + 1
            if new_count == count:
                return colors
            count = new_count

    def balanced(self, colors: IntArray) -> bool:
        size = int(colors.max()) + 1
        left = np.bincount(colors[: self.n], minlength=size)
        right = np.bincount(colors[self.n :], minlength=size)
        return bool(np.array_equal(left, right))


def _preserves(g: ExplicitGraph, h: ExplicitGraph, mapping: IntArray) -> bool:
    edges = g.edges()
    if edges.shape[0] != h.edge_count:
        return False
    if edges.shape[0] == 0:
        return True
    return bool(h.adjacent(mapping[edges[:, 0]], mapping[edges[:, 1]]).all())


def _search(union: _Union, g: ExplicitGraph, h: ExplicitGraph, colors: IntArray) -> Optional[IntArray]:
    colors = union.refine(colors)
    if not union.balanced(colors):
        return None
    n = union.n
    counts = np.bincount(colors[:n])
    if bool((counts <= 1).all()):
        image_of_color = np.empty(counts.shape[0], dtype=np.int64)
        image_of_color[colors[n:]] = np.arange(n, dtype=np.int64)
        mapping = image_of_color[colors[:n]]
        return mapping if _preserves(g, h, mapping) else None
    cell = int(np.argmin(np.where(counts > 1, counts, n + 1)))
    v = int(np.flatnonzero(colors[:n] == cell)[0])
    fresh = int(colors.max()) + 1
    for w in np.flatnonzero(colors[n:] == cell):
        trial = colors.copy()
        trial[v] = fresh
        trial[n + int(w)] = fresh
        found = _search(union, g, h, trial)
        if found is not None:
            return found
    return None


def isomorphic(g: Graph, h: Graph, config: Optional[KitConfiguration] = None) -> Optional[IntArray]:
    """A vertex bijection ``mapping`` with u ~ v iff mapping[u] ~ mapping[v], or None."""
    limit = resolve_limits(config).max_isomorphism_vertices
    for graph in (g, h):
        if graph.order > limit:
            raise TooLargeError(graph.order, limit, "isomorphism test")
    eg, eh = g.to_explicit(config), h.to_explicit(config)
    if eg.order != eh.order or eg.edge_count != eh.edge_count:
        return None
    if not np.array_equal(np.sort(eg.degrees()), np.sort(eh.degrees())):
        return None
    if eg.order == 0:
        return np.zeros(0, dtype=np.int64)
    union = _Union(eg, eh)
    mapping = _search(union, eg, eh, np.zeros(2 * eg.order, dtype=np.int64))
    logger.debug("isomorphism %r -> %r: %s", g, h, "found" if mapping is not None else "none")
    return mapping


def _extend(adj: BoolArray, images: List[int], used: int) -> Optional[List[int]]:
    """Complete a partial automorphism fixed on a prefix of the vertices."""
    n = adj.shape[0]
    k = len(images)
    if k == n:
        return images
    degree = adj.sum(axis=1)
    for w in range(n):
        if (used >> w) & 1 or degree[w] != degree[k]:
            continue
        if all(adj[k, x] == adj[w, images[x]] for x in range(k)):
            found = _extend(adj, images + [w], used | (1 << w))
            if found is not None:
                return found
    return None


def _orbit(point: int, gens: List["Permutation"]) -> set[int]:
    orbit = {point}
    frontier = [point]
    while frontier:
        p = frontier.pop()
        for gen in gens:
            q = gen(p)
            if q not in orbit:
                orbit.add(q)
                frontier.append(q)
    return orbit


def brute_force_automorphisms(g: Graph, config: Optional[KitConfiguration] = None) -> PermGroup:
    """Aut(g) by exhaustive search, returned with a stabilizer chain."""
    # Import here to avoid circular imports
    from ..permgroup.permutation import Permutation
    from ..permgroup.schreier_sims import schreier_sims

    limit = resolve_limits(config).max_brute_force_vertices
    if g.order > limit:
        raise TooLargeError(g.order, limit, "automorphism search")
    n = g.order
    adj = g.to_explicit().adjacency_matrix()
    gens: List[Permutation] = []
    for i in reversed(range(n)):
        orbit = _orbit(i, gens)
        for j in range(i + 1, n):
            if j in orbit:
                continue
            prefix = list(range(i)) + [j]
            used = sum(1 << p for p in prefix)
            if any(adj[i, x] != adj[j, x] for x in range(i)):
                continue
            found = _extend(adj, prefix, used)
            if found is not None:
                gens.append(Permutation(found))
                orbit = _orbit(i, gens)
    logger.debug("brute-force search on %d vertices found %d generators", n, len(gens))
    return schreier_sims(gens or [Permutation.identity(max(n, 1))])
