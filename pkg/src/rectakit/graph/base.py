"""Graph representations.

Two concrete representations share the :class:`Graph` interface:

* :class:`ExplicitGraph` keeps sorted adjacency lists in CSR arrays.
* :class:`CayleyGraph` is the implicit XOR-Cayley graph on GF(2)^dimension:
  ``u ~ v`` iff ``u ^ v`` lies in the connection set. Hypercubes, coset graphs
  (in syndrome coordinates) and halved graphs of those are all of this kind and
  are never turned into adjacency lists unless asked.

Every routine in the package accepts either representation through the
vectorized primitives ``expand``, ``adjacent`` and ``neighbors``.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING, Any, Callable, Optional, Sequence

import numpy as np

from .._core import BoolArray, IntArray, KitConfiguration, QuotientTooLargeError, as_int_array, resolve_limits
from ..gf2code.linalg import SubspaceCoordinates, rank

if TYPE_CHECKING:
    from ..gf2code.codes import LinearCode


class Graph(ABC):
    """A finite simple undirected graph on vertices ``0 .. order-1``."""

    name: str = ""

    @property
    @abstractmethod
    def order(self) -> int: ...

    @abstractmethod
    def neighbors(self, u: int) -> IntArray:
        """Sorted neighbours of ``u``."""

    @abstractmethod
    def expand(self, frontier: IntArray) -> tuple[IntArray, IntArray]:
        """All (position-in-frontier, neighbour) pairs of a vertex array."""

    @abstractmethod
    def adjacent(self, us: IntArray, vs: IntArray) -> BoolArray:
        """Elementwise adjacency test."""

    @abstractmethod
    def degrees(self) -> IntArray: ...

    @abstractmethod
    def edges(self) -> IntArray:
        """Edge array of shape (M, 2) with ``u < v``, sorted."""

    @abstractmethod
    def to_explicit(self, config: Optional[KitConfiguration] = None) -> ExplicitGraph: ...

    @property
    def translation_invariant(self) -> bool:
        """True when translations act transitively, so one vertex represents all."""
        return False

    def label(self, u: int) -> Any:
        return u

    @property
    def vertices(self) -> range:
        return range(self.order)

    def degree(self, u: int) -> int:
        return int(self.neighbors(u).shape[0])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacent(np.array([u]), np.array([v]))[0])

    @property
    def edge_count(self) -> int:
        return int(self.degrees().sum()) // 2

    @property
    def valency(self) -> Optional[int]:
        """Common degree of a regular graph, else None."""
        deg = self.degrees()
        if deg.shape[0] == 0:
            return 0
        return int(deg[0]) if bool((deg == deg[0]).all()) else None

    def is_regular(self) -> bool:
        return self.valency is not None

    def __repr__(self) -> str:
        kind = type(self).__name__
        return f"{kind}({self.name or 'graph'}, order={self.order})"


class ExplicitGraph(Graph):
    """Adjacency lists in CSR form: neighbours of u are ``indices[indptr[u]:indptr[u+1]]``."""

    def __init__(
        self,
        order: int,
        indptr: IntArray,
        indices: IntArray,
        labels: Optional[Sequence[Any]] = None,
        parent: Optional[IntArray] = None,
        name: str = "",
    ) -> None:
        self._order = order
        self.indptr = as_int_array(indptr)
        self.indices = as_int_array(indices)
        self.indptr.setflags(write=False)
        self.indices.setflags(write=False)
        self.labels = tuple(labels) if labels is not None else None
        self.parent = as_int_array(parent) if parent is not None else None
        self.name = name
        self._keys: Optional[IntArray] = None

    @classmethod
    def from_edges(
        cls,
        order: int,
        edges: IntArray | Sequence[tuple[int, int]],
        labels: Optional[Sequence[Any]] = None,
        parent: Optional[IntArray] = None,
        name: str = "",
    ) -> ExplicitGraph:
        """Build from an edge array; duplicate edges collapse, loops are rejected."""
        arr = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        if arr.shape[0] and (arr.min() < 0 or arr.max() >= order):
            raise ValueError("edge endpoint out of range")
        if bool((arr[:, 0] == arr[:, 1]).any()):
            raise ValueError("loops are not allowed in a simple graph")
        lo = np.minimum(arr[:, 0], arr[:, 1])
        hi = np.maximum(arr[:, 0], arr[:, 1])
        keys = np.unique(lo * order + hi)
        lo, hi = keys // order, keys % order
        src = np.concatenate([lo, hi])
        dst = np.concatenate([hi, lo])
        perm = np.lexsort((dst, src))
        src, dst = src[perm], dst[perm]
        counts = np.bincount(src, minlength=order)
        indptr = np.zeros(order + 1, dtype=np.int64)
        np.cumsum(counts, out=indptr[1:])
        return cls(order, indptr, dst, labels=labels, parent=parent, name=name)

    @classmethod
    def from_adjacency_matrix(cls, matrix: BoolArray, labels: Optional[Sequence[Any]] = None, name: str = "") -> ExplicitGraph:
        upper = np.triu(np.asarray(matrix, dtype=bool), k=1)
        us, vs = np.nonzero(upper)
        return cls.from_edges(matrix.shape[0], np.stack([us, vs], axis=1), labels=labels, name=name)

    @property
    def order(self) -> int:
        return self._order

    def label(self, u: int) -> Any:
        return self.labels[u] if self.labels is not None else u

    def neighbors(self, u: int) -> IntArray:
        return self.indices[self.indptr[u] : self.indptr[u + 1]]

    def degrees(self) -> IntArray:
        return np.diff(self.indptr)

    def expand(self, frontier: IntArray) -> tuple[IntArray, IntArray]:
        frontier = as_int_array(frontier)
        starts = self.indptr[frontier]
        counts = self.indptr[frontier + 1] - starts
        total = int(counts.sum())
        owners = np.repeat(np.arange(frontier.shape[0], dtype=np.int64), counts)
        offsets = np.arange(total, dtype=np.int64) - np.repeat(np.cumsum(counts) - counts, counts)
        return owners, self.indices[np.repeat(starts, counts) + offsets]

    @property
    def arc_keys(self) -> IntArray:
        """Sorted ``u * order + v`` over all arcs."""
        if self._keys is None:
            src = np.repeat(np.arange(self._order, dtype=np.int64), self.degrees())
            self._keys = src * self._order + self.indices
        return self._keys

    def adjacent(self, us: IntArray, vs: IntArray) -> BoolArray:
        keys = as_int_array(us) * self._order + as_int_array(vs)
        arcs = self.arc_keys
        if arcs.shape[0] == 0:
            return np.zeros(keys.shape, dtype=bool)
        pos = np.searchsorted(arcs, keys)
        pos = np.minimum(pos, arcs.shape[0] - 1)
        return arcs[pos] == keys

    def slot_of(self, us: IntArray, vs: IntArray) -> IntArray:
        """Position of ``v`` inside the adjacency list of ``u`` (-1 if not adjacent)."""
        keys = as_int_array(us) * self._order + as_int_array(vs)
        arcs = self.arc_keys
        pos = np.minimum(np.searchsorted(arcs, keys), max(arcs.shape[0] - 1, 0))
        found = arcs[pos] == keys if arcs.shape[0] else np.zeros(keys.shape, dtype=bool)
        slot = pos - self.indptr[as_int_array(us)]
        return np.where(found, slot, -1)

    def edges(self) -> IntArray:
        src = np.repeat(np.arange(self._order, dtype=np.int64), self.degrees())
        mask = src < self.indices
        return np.stack([src[mask], self.indices[mask]], axis=1)

    def neighbor_table(self) -> IntArray:
        """(order, k) array of adjacency lists of a k-regular graph."""
        k = self.valency
        if k is None:
            raise ValueError("neighbor_table needs a regular graph")
        return self.indices.reshape(self._order, k)

    def adjacency_matrix(self) -> BoolArray:
        mat = np.zeros((self._order, self._order), dtype=bool)
        src = np.repeat(np.arange(self._order), self.degrees())
        mat[src, self.indices] = True
        return mat

    def to_explicit(self, config: Optional[KitConfiguration] = None) -> ExplicitGraph:
        return self


class CayleyGraph(Graph):
    """The Cayley graph of GF(2)^dimension with respect to ``connection``.

    Vertex ids are the group elements themselves. ``coordinates`` and ``offset``
    record how the vertices sit inside a parent Cayley graph when this graph was
    derived from one (halved graphs): parent id = decode(id) ^ offset.
    """

    def __init__(
        self,
        dimension: int,
        connection: Sequence[int] | IntArray,
        name: str = "",
        labeler: Optional[Callable[[int], Any]] = None,
        code: Optional[LinearCode] = None,
        coordinates: Optional[SubspaceCoordinates] = None,
        offset: int = 0,
    ) -> None:
        conn = np.unique(as_int_array(connection))
        if conn.shape[0] and (conn[0] <= 0 or conn[-1] >> dimension):
            raise ValueError("connection set must consist of nonzero elements of the group")
        conn.setflags(write=False)
        self.dimension = dimension
        self.connection = conn
        self.name = name
        self.labeler = labeler
        self.code = code
        self.coordinates = coordinates
        self.offset = offset
        self._mask: Optional[BoolArray] = None

    @property
    def order(self) -> int:
        return 1 << self.dimension

    @property
    def translation_invariant(self) -> bool:
        return True

    @property
    def valency(self) -> int:
        return int(self.connection.shape[0])

    def label(self, u: int) -> Any:
        return self.labeler(u) if self.labeler is not None else u

    def is_connected(self) -> bool:
        return rank((int(s) for s in self.connection), self.dimension) == self.dimension

    def neighbors(self, u: int) -> IntArray:
        return np.sort(np.int64(u) ^ self.connection)

    def degrees(self) -> IntArray:
        return np.full(self.order, self.valency, dtype=np.int64)

    def expand(self, frontier: IntArray) -> tuple[IntArray, IntArray]:
        frontier = as_int_array(frontier)
        k = self.valency
        owners = np.repeat(np.arange(frontier.shape[0], dtype=np.int64), k)
        return owners, (frontier[:, None] ^ self.connection[None, :]).ravel()

    def connection_mask(self) -> BoolArray:
        if self._mask is None:
            mask = np.zeros(self.order, dtype=bool)
            mask[self.connection] = True
            self._mask = mask
        return self._mask

    def adjacent(self, us: IntArray, vs: IntArray) -> BoolArray:
        diff = as_int_array(us) ^ as_int_array(vs)
        if self.dimension <= 26:
            return self.connection_mask()[diff]
        return np.isin(diff, self.connection)

    def edges(self) -> IntArray:
        if self.dimension > 22:
            raise QuotientTooLargeError(self.dimension, 22, "edge list")
        us = np.repeat(np.arange(self.order, dtype=np.int64), self.valency)
        vs = (np.arange(self.order, dtype=np.int64)[:, None] ^ self.connection[None, :]).ravel()
        mask = us < vs
        edges = np.stack([us[mask], vs[mask]], axis=1)
        return edges[np.lexsort((edges[:, 1], edges[:, 0]))]

    def neighbor_table(self) -> IntArray:
        return np.arange(self.order, dtype=np.int64)[:, None] ^ self.connection[None, :]

    def parent_vertices(self, ids: IntArray) -> IntArray:
        """Vertex ids of the parent Cayley graph this one was derived from."""
        ids = as_int_array(ids)
        if self.coordinates is None:
            return ids ^ self.offset
        return self.coordinates.decode(ids) ^ self.offset

    def to_explicit(self, config: Optional[KitConfiguration] = None) -> ExplicitGraph:
        limit = resolve_limits(config).max_explicit_quotient_dimension
        if self.dimension > limit:
            raise QuotientTooLargeError(self.dimension, limit, "explicit Cayley graph")
        table = np.sort(self.neighbor_table(), axis=1)
        indptr = np.arange(self.order + 1, dtype=np.int64) * self.valency
        labels = [self.label(u) for u in range(self.order)] if self.labeler is not None else None
        return ExplicitGraph(self.order, indptr, table.ravel(), labels=labels, name=self.name)
