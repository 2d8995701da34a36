"""Graphs derived from other graphs: induced subgraphs, distance-k graphs,
halved graphs, bipartite doubles and quotients."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Callable, List, Sequence

import numpy as np

from .._core import DisconnectedError, IntArray, as_int_array
from ..gf2code.codes import LinearCode
from ..gf2code.linalg import SubspaceCoordinates
from .base import CayleyGraph, ExplicitGraph, Graph
from .distances import bfs_layers, connected_components, is_bipartite, is_connected, two_coloring

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VertexPartition:
    """A partition of the vertex set; ``block_of[v]`` is the block index of v.

    Block indices run over ``0 .. size-1`` and every block is nonempty.
    """

    block_of: IntArray

    def __post_init__(self) -> None:
        blocks = as_int_array(self.block_of)
        if blocks.shape[0] and (blocks.min() < 0 or np.unique(blocks).shape[0] != int(blocks.max()) + 1):
            raise ValueError("block indices must be 0..size-1 with every block nonempty")
        blocks.setflags(write=False)
        object.__setattr__(self, "block_of", blocks)

    @classmethod
    def from_labels(cls, labels: Sequence[int] | IntArray) -> VertexPartition:
        """Partition by equal labels; blocks are numbered in increasing label order."""
        _, inverse = np.unique(as_int_array(labels), return_inverse=True)
        return cls(inverse.astype(np.int64))

    @classmethod
    def from_blocks(cls, order: int, blocks: Sequence[Sequence[int]]) -> VertexPartition:
        block_of = np.full(order, -1, dtype=np.int64)
        for k, block in enumerate(blocks):
            members = as_int_array(block)
            if members.shape[0] == 0:
                raise ValueError("blocks must be nonempty")
            if bool((block_of[members] != -1).any()):
                raise ValueError("blocks must be disjoint")
            block_of[members] = k
        if bool((block_of == -1).any()):
            raise ValueError("blocks must cover every vertex")
        return cls(block_of)

    @classmethod
    def singletons(cls, order: int) -> VertexPartition:
        return cls(np.arange(order, dtype=np.int64))

    @property
    def order(self) -> int:
        return int(self.block_of.shape[0])

    @property
    def size(self) -> int:
        return int(self.block_of.max()) + 1 if self.order else 0

    @property
    def blocks(self) -> List[IntArray]:
        order = np.argsort(self.block_of, kind="stable")
        bounds = np.cumsum(np.bincount(self.block_of, minlength=self.size))[:-1]
        return np.split(order, bounds)


@dataclass(frozen=True)
class Quotient:
    """A quotient graph, the blocks containing an edge, and whether the projection covers."""

    graph: ExplicitGraph
    covering: bool
    loops: tuple[int, ...]


def coset_partition(c: LinearCode) -> VertexPartition:
    """The partition of Q_n into cosets of ``c``; block index = syndrome."""
    return VertexPartition(c.syndromes(np.arange(1 << c.n, dtype=np.uint64)))


def induced_subgraph(g: Graph, vertices: Sequence[int] | IntArray, name: str = "") -> ExplicitGraph:
    """Subgraph induced on ``vertices``; local vertex k is ``parent[k]`` (sorted ascending)."""
    members = np.unique(as_int_array(vertices))
    owners, nbrs = g.expand(members)
    pos = np.searchsorted(members, nbrs)
    pos = np.minimum(pos, max(members.shape[0] - 1, 0))
    inside = members[pos] == nbrs if members.shape[0] else np.zeros(0, dtype=bool)
    edges = np.stack([owners[inside], pos[inside]], axis=1)
    labels = [g.label(int(v)) for v in members]
    return ExplicitGraph.from_edges(members.shape[0], edges, labels=labels, parent=members, name=name)


def induced_neighborhood(g: Graph, u: int) -> ExplicitGraph:
    """The local graph Γ(u), with back-map ``parent`` to vertices of g."""
    return induced_subgraph(g, g.neighbors(u), name=f"local({u})")


def _cayley_like(g: CayleyGraph, connection: IntArray, name: str) -> CayleyGraph:
    return CayleyGraph(
        g.dimension,
        connection,
        name=name,
        labeler=g.labeler,
        code=g.code,
        coordinates=g.coordinates,
        offset=g.offset,
    )


def distance_k_graph(g: Graph, k: int) -> Graph:
    """Vertices of g, adjacent when at distance exactly k in g."""
    if k < 1:
        raise ValueError("distance_k_graph needs k >= 1")
    name = f"{g.name}_{k}" if g.name else ""
    if isinstance(g, CayleyGraph):
        layers = bfs_layers(g, 0, k)
        shell = layers[k] if len(layers) > k else np.zeros(0, dtype=np.int64)
        return _cayley_like(g, shell, name)
    edges = []
    for u in range(g.order):
        layers = bfs_layers(g, u, k)
        if len(layers) > k:
            far = layers[k][layers[k] > u]
            edges.append(np.stack([np.full(far.shape[0], u, dtype=np.int64), far], axis=1))
    all_edges = np.concatenate(edges) if edges else np.zeros((0, 2), dtype=np.int64)
    eg = g.to_explicit()
    return ExplicitGraph.from_edges(g.order, all_edges, labels=eg.labels, name=name)


def _halved_cayley(g: CayleyGraph) -> tuple[Graph, ...]:
    conn = g.connection
    ends = np.unique((conn[:, None] ^ conn[None, :]).ravel())
    ends = ends[(ends != 0) & ~g.adjacent(np.zeros_like(ends), ends)]
    coords = SubspaceCoordinates((int(e) for e in ends), g.dimension)
    connection = coords.encode(ends)

    def make(offset: int, index: int) -> CayleyGraph:
        def labeler(u: int) -> Any:
            return g.label(int(coords.decode_one(int(u))) ^ offset)

        return CayleyGraph(
            coords.dimension,
            connection,
            name=f"half{index}-{g.name}" if g.name else "",
            labeler=labeler,
            coordinates=coords,
            offset=offset,
        )

    return make(0, 0), make(int(conn[0]), 1)


def _halved_explicit(g: ExplicitGraph, color: IntArray) -> tuple[Graph, ...]:
    halves = []
    for part in (0, 1):
        members = np.flatnonzero(color == part)
        own1, mids = g.expand(members)
        own2, ends = g.expand(mids)
        srcs = members[own1[own2]]
        keep = ends != srcs
        local = np.stack([np.searchsorted(members, srcs[keep]), np.searchsorted(members, ends[keep])], axis=1)
        labels = [g.label(int(v)) for v in members]
        name = f"half{part}-{g.name}" if g.name else ""
        halves.append(ExplicitGraph.from_edges(members.shape[0], local, labels=labels, parent=members, name=name))
    return tuple(halves)


def halved_graphs(g: Graph) -> tuple[Graph, ...]:
    """The two halved graphs of a connected bipartite graph.

    The first contains vertex 0. A connected non-bipartite input yields its
    distance-2 graph as the single result.
    """
    if not is_connected(g):
        raise DisconnectedError(len(connected_components(g)))
    if not is_bipartite(g):
        logger.debug("halved_graphs on non-bipartite %r: returning the distance-2 graph", g)
        return (distance_k_graph(g, 2),)
    if isinstance(g, CayleyGraph):
        return _halved_cayley(g)
    eg = g.to_explicit()
    color = two_coloring(eg)
    assert color is not None
    return _halved_explicit(eg, color)


def bipartite_double(g: Graph) -> Graph:
    """Γ.2: vertex v + b·N for b in {0, 1}, with (u, 0) ~ (v, 1) whenever u ~ v."""
    name = f"{g.name}.2" if g.name else ""
    if isinstance(g, CayleyGraph):
        top = 1 << g.dimension
        base_labeler: Callable[[int], Any] = g.label

        def labeler(u: int) -> Any:
            return (base_labeler(int(u) & (top - 1)), int(u) >> g.dimension)

        return CayleyGraph(g.dimension + 1, np.asarray(g.connection) | top, name=name, labeler=labeler)
    eg = g.to_explicit()
    edges = eg.edges()
    n = eg.order
    doubled = np.concatenate([np.stack([edges[:, 0], edges[:, 1] + n], axis=1), np.stack([edges[:, 1], edges[:, 0] + n], axis=1)])
    labels = [(eg.label(v), 0) for v in range(n)] + [(eg.label(v), 1) for v in range(n)]
    return ExplicitGraph.from_edges(2 * n, doubled, labels=labels, name=name)


def quotient_by_partition(g: Graph, partition: VertexPartition) -> Quotient:
    """Γ_B with the covering test: no block holds an edge, and every vertex has
    exactly one neighbour in each block adjacent to its own."""
    if partition.order != g.order:
        raise ValueError("partition does not match the vertex set")
    block_of = partition.block_of
    k = partition.size
    vertices = np.arange(g.order, dtype=np.int64)
    src, nbrs = g.expand(vertices)
    bs, bt = block_of[src], block_of[nbrs]
    loops = tuple(int(b) for b in np.unique(bs[bs == bt]))
    between = bs != bt
    qkeys = np.unique(np.minimum(bs, bt)[between] * k + np.maximum(bs, bt)[between])
    quotient = ExplicitGraph.from_edges(
        k,
        np.stack([qkeys // k, qkeys % k], axis=1),
        parent=np.array([int(b[0]) for b in partition.blocks], dtype=np.int64),
        name=f"{g.name}/B" if g.name else "",
    )
    covering = not loops
    if covering:
        _, counts = np.unique(src * k + bt, return_counts=True)
        covering = bool((counts == 1).all()) and bool((g.degrees() == quotient.degrees()[block_of]).all())
    logger.debug("quotient of %r by %d blocks: covering=%s loops=%d", g, k, covering, len(loops))
    return Quotient(quotient, covering, loops)


def component_graph(g: Graph, start: int = 0) -> ExplicitGraph:
    """The component containing ``start`` as an induced subgraph."""
    members = np.concatenate(bfs_layers(g, start))
    return induced_subgraph(g, members, name=f"{g.name}[comp]" if g.name else "")
