"""Breadth-first distances, distance profiles and the rectagraph test.

BFS is layered: in an undirected graph the neighbours of shell i lie in shells
i-1, i and i+1, so only the two latest shells are needed to find the next one.
That keeps memory proportional to the explored region, which matters for
implicit Cayley graphs with millions of vertices.
"""

from __future__ import annotations

import logging
import math
from typing import List, Optional

import numpy as np

from .._core import UNREACHABLE, DisconnectedError, IntArray
from ..gf2code.linalg import RowEchelon
from .base import CayleyGraph, ExplicitGraph, Graph
from .models import DistanceProfile, RectagraphResult

logger = logging.getLogger(__name__)

INFINITY = math.inf

# Upper bound on 2-paths materialized at once by the explicit rectagraph sweep.
_PATH_CHUNK = 1 << 22


def bfs_layers(g: Graph, u: int, max_depth: Optional[int] = None) -> List[IntArray]:
    """Sorted vertex arrays of the shells Γ_0(u), Γ_1(u), ... up to ``max_depth``."""
    layers = [np.array([u], dtype=np.int64)]
    previous = np.zeros(0, dtype=np.int64)
    while max_depth is None or len(layers) <= max_depth:
        current = layers[-1]
        _, nbrs = g.expand(current)
        nxt = np.unique(nbrs)
        nxt = nxt[~np.isin(nxt, current, assume_unique=True)]
        nxt = nxt[~np.isin(nxt, previous, assume_unique=True)]
        if nxt.shape[0] == 0:
            break
        previous = current
        layers.append(nxt)
    return layers


def bfs_distances(g: Graph, u: int) -> IntArray:
    """Distance from ``u`` to every vertex; unreachable vertices get ``UNREACHABLE``."""
    dist = np.full(g.order, UNREACHABLE, dtype=np.int64)
    for i, layer in enumerate(bfs_layers(g, u)):
        dist[layer] = i
    return dist


def _shell_counts(g: Graph, shell: IntArray, inner: IntArray, outer: IntArray) -> tuple[IntArray, IntArray, IntArray]:
    owners, nbrs = g.expand(shell)
    down = np.isin(nbrs, inner)
    up = np.isin(nbrs, outer)
    size = shell.shape[0]
    c = np.bincount(owners[down], minlength=size)
    b = np.bincount(owners[up], minlength=size)
    a = np.bincount(owners, minlength=size) - c - b
    return c, a, b


def distance_profile(g: Graph, u: int, max_distance: Optional[int] = None) -> DistanceProfile:
    """Shell sizes and the sets of c_i, a_i, b_i values from ``u``.

    With ``max_distance`` the profile stops at that shell (b of the last shell is
    still exact since one extra shell is explored).
    """
    layers = bfs_layers(g, u, None if max_distance is None else max_distance + 1)
    depth = len(layers) - 1 if max_distance is None else min(max_distance, len(layers) - 1)
    empty = np.zeros(0, dtype=np.int64)
    sizes, cs, as_, bs = [], [], [], []
    for i in range(depth + 1):
        inner = layers[i - 1] if i > 0 else empty
        outer = layers[i + 1] if i + 1 < len(layers) else empty
        c, a, b = _shell_counts(g, layers[i], inner, outer)
        sizes.append(int(layers[i].shape[0]))
        cs.append([int(v) for v in np.unique(c)])
        as_.append([int(v) for v in np.unique(a)])
        bs.append([int(v) for v in np.unique(b)])
    return DistanceProfile(source=u, shell_sizes=sizes, c_values=cs, a_values=as_, b_values=bs)


def is_connected(g: Graph) -> bool:
    if isinstance(g, CayleyGraph):
        return g.is_connected()
    if g.order == 0:
        return True
    return sum(int(layer.shape[0]) for layer in bfs_layers(g, 0)) == g.order


def connected_components(g: Graph) -> List[IntArray]:
    """Vertex sets of the components, each sorted, ordered by smallest vertex."""
    seen = np.zeros(g.order, dtype=bool)
    components = []
    start = 0
    while start < g.order:
        comp = np.sort(np.concatenate(bfs_layers(g, start)))
        seen[comp] = True
        components.append(comp)
        rest = np.flatnonzero(~seen[start:])
        if rest.shape[0] == 0:
            break
        start += int(rest[0])
    return components


def two_coloring(g: Graph) -> Optional[IntArray]:
    """A proper 2-colouring (BFS parity per component), or None if some edge is monochromatic."""
    color = np.full(g.order, UNREACHABLE, dtype=np.int64)
    for comp in connected_components(g):
        for i, layer in enumerate(bfs_layers(g, int(comp[0]))):
            color[layer] = i % 2
    edges = g.edges()
    if edges.shape[0] and bool((color[edges[:, 0]] == color[edges[:, 1]]).any()):
        return None
    return color


def _even_combinations_span(g: CayleyGraph) -> RowEchelon:
    conn = [int(s) for s in g.connection]
    return RowEchelon(g.dimension, (conn[0] ^ t for t in conn[1:]))


def is_bipartite(g: Graph) -> bool:
    if isinstance(g, CayleyGraph):
        # bipartite iff no odd sum of generators vanishes
        if g.valency == 0:
            return True
        return not _even_combinations_span(g).contains(int(g.connection[0]))
    return two_coloring(g) is not None


def diameter(g: Graph) -> int:
    if not is_connected(g):
        raise DisconnectedError(len(connected_components(g)))
    sources = [0] if g.translation_invariant else range(g.order)
    return max(len(bfs_layers(g, u)) - 1 for u in sources)


def _girth_bound_from(g: Graph, u: int, bound: int | float) -> int | float:
    """Shortest cycle length seen from ``u`` (c_i >= 2 gives 2i, a_i > 0 gives 2i + 1)."""
    layers = [np.array([u], dtype=np.int64)]
    previous = np.zeros(0, dtype=np.int64)
    i = 0
    while 2 * i < bound:
        current = layers[-1]
        owners, nbrs = g.expand(current)
        if i > 0:
            down = np.bincount(owners[np.isin(nbrs, previous)], minlength=current.shape[0])
            if bool((down >= 2).any()):
                return 2 * i
            if bool(np.isin(nbrs, current).any()):
                return 2 * i + 1
        nxt = np.unique(nbrs)
        nxt = nxt[~np.isin(nxt, current) & ~np.isin(nxt, previous)]
        if nxt.shape[0] == 0:
            break
        previous = current
        layers.append(nxt)
        i += 1
    return bound


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, or INFINITY for forests."""
    best: int | float = INFINITY
    sources = [0] if g.translation_invariant else range(g.order)
    for u in sources:
        best = _girth_bound_from(g, u, best)
        if best == 3:
            break
    return best if best == INFINITY else int(best)


def _rectagraph_cayley(g: CayleyGraph) -> RectagraphResult:
    conn = g.connection
    s = np.repeat(conn, conn.shape[0])
    t = np.tile(conn, conn.shape[0])
    keep = s != t
    s, t = s[keep], t[keep]
    ends = s ^ t
    tri = g.adjacent(np.zeros_like(ends), ends)
    if bool(tri.any()):
        k = int(np.flatnonzero(tri)[0])
        return RectagraphResult(holds=False, reason="triangle", witness=[0, int(s[k]), int(ends[k])])
    values, counts = np.unique(ends, return_counts=True)
    bad = np.flatnonzero(counts != 2)
    if bad.shape[0]:
        k = int(bad[0])
        return RectagraphResult(holds=False, reason="c2", witness=[0, int(values[k])], c2=int(counts[k]))
    return RectagraphResult(holds=True)


def _rectagraph_explicit(g: ExplicitGraph) -> RectagraphResult:
    n = g.order
    deg = g.degrees()
    per_source = np.maximum(1, (deg.astype(np.int64) ** 2))
    start = 0
    while start < n:
        stop = start + 1
        budget = int(per_source[start])
        while stop < n and budget + int(per_source[stop]) <= _PATH_CHUNK:
            budget += int(per_source[stop])
            stop += 1
        sources = np.arange(start, stop, dtype=np.int64)
        own1, mids = g.expand(sources)
        own2, ends = g.expand(mids)
        srcs = sources[own1[own2]]
        middles = mids[own2]
        keep = ends != srcs
        srcs, middles, ends = srcs[keep], middles[keep], ends[keep]
        tri = g.adjacent(srcs, ends)
        if bool(tri.any()):
            k = int(np.flatnonzero(tri)[0])
            return RectagraphResult(holds=False, reason="triangle", witness=[int(srcs[k]), int(middles[k]), int(ends[k])])
        keys, counts = np.unique(srcs * n + ends, return_counts=True)
        bad = np.flatnonzero(counts != 2)
        if bad.shape[0]:
            k = int(bad[0])
            return RectagraphResult(holds=False, reason="c2", witness=[int(keys[k] // n), int(keys[k] % n)], c2=int(counts[k]))
        start = stop
    return RectagraphResult(holds=True)


def is_rectagraph(g: Graph) -> RectagraphResult:
    """Connected, triangle-free, and every pair at distance 2 has exactly two common neighbours."""
    if not is_connected(g):
        return RectagraphResult(holds=False, reason="disconnected")
    if isinstance(g, CayleyGraph):
        result = _rectagraph_cayley(g)
    else:
        result = _rectagraph_explicit(g.to_explicit())
    logger.debug("rectagraph test on %r: %s", g, result.holds)
    return result

