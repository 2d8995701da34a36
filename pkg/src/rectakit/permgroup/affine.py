"""The affine group (cosets) ⋊ H acting on the vertices of a coset graph.

Vertices are syndromes, or coordinates of the even-weight syndromes when the
action is restricted to E_n/C; the latter are the vertex ids of the first
halved graph of the coset graph. A group element is an :class:`AffineMap`
``x -> L(x) + t`` on these ids, so the translation part and the linear part
stay separate and the stabilizer of vertex 0 is the linear part.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import List, Optional, Sequence

import numpy as np

from .._core import (
    IntArray,
    KitConfiguration,
    LengthMismatchError,
    NotAutomorphismError,
    NotEvenError,
    TooLargeError,
    as_int_array,
    resolve_limits,
)
from ..gf2code import LinearCode, SubspaceCoordinates, is_code_automorphism, is_even, rank
from ..gf2code.linalg import xor_combine
from ..graph.base import CayleyGraph
from ..graph.derived import halved_graphs
from ..graph.families import coset_graph
from .permutation import Permutation
from .schreier_sims import PermGroup

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AffineMap:
    """x -> xor of ``columns[k]`` over the set bits k of x, then xor ``shift``."""

    columns: tuple[int, ...]
    shift: int = 0

    @classmethod
    def translation(cls, dimension: int, shift: int) -> AffineMap:
        return cls(tuple(1 << k for k in range(dimension)), shift)

    @property
    def is_translation(self) -> bool:
        return all(col == 1 << k for k, col in enumerate(self.columns))

    def apply(self, points: IntArray) -> IntArray:
        return xor_combine(as_int_array(points), self.columns) ^ np.int64(self.shift)

    def __call__(self, point: int) -> int:
        return int(self.apply(np.array([point], dtype=np.int64))[0])

    def __mul__(self, other: AffineMap) -> AffineMap:
        """Apply self, then other."""
        columns = tuple(int(c) for c in other.apply(np.array(self.columns, dtype=np.int64)) ^ np.int64(other.shift))
        return AffineMap(columns, other(self.shift))


class AffineAction:
    """Translations by the cosets of e_i (or e_1 + e_j) together with the images of ``h_gens``."""

    def __init__(self, code: LinearCode, h_gens: Sequence[Permutation], restrict_even: bool = False) -> None:
        for index, sigma in enumerate(h_gens):
            if sigma.degree != code.n:
                raise LengthMismatchError(code.n, sigma.degree, "degree")
            if not is_code_automorphism(sigma, code):
                raise NotAutomorphismError(index)
        if restrict_even and not is_even(code):
            raise NotEvenError()
        self.code = code
        self.h_gens = tuple(h_gens)
        self.restrict_even = restrict_even
        h = np.array(code.column_syndromes, dtype=np.int64)
        self._columns = h
        self.coordinates: Optional[SubspaceCoordinates] = None
        if restrict_even:
            pairs = np.unique((h[:, None] ^ h[None, :]).ravel())
            self.coordinates = SubspaceCoordinates((int(p) for p in pairs if p), code.codimension)
            self.dimension = self.coordinates.dimension
        else:
            self.dimension = code.codimension

    @property
    def size(self) -> int:
        return 1 << self.dimension

    def _encode(self, syndromes: IntArray) -> IntArray:
        syndromes = as_int_array(syndromes)
        return syndromes if self.coordinates is None else self.coordinates.encode(syndromes)

    def _syndrome_map(self, sigma: Permutation) -> tuple[int, ...]:
        """Columns of the map on syndromes induced by sigma: bit k reads free position k."""
        free = self.code.free_positions
        return tuple(int(self._columns[sigma(p)]) for p in free)

    def _linear_part(self, sigma: Permutation) -> AffineMap:
        columns = self._syndrome_map(sigma)
        if self.coordinates is None:
            return AffineMap(columns)
        rows = np.array(self.coordinates.rows, dtype=np.int64)
        return AffineMap(tuple(int(v) for v in self._encode(xor_combine(rows, columns))))

    @cached_property
    def translations(self) -> List[AffineMap]:
        h = self._columns
        shifts = h ^ h[0] if self.restrict_even else h
        unique = [int(s) for s in self._encode(np.unique(shifts)) if s]
        return [AffineMap.translation(self.dimension, s) for s in unique]

    @cached_property
    def linear_parts(self) -> List[AffineMap]:
        return [self._linear_part(sigma) for sigma in self.h_gens]

    @property
    def generators(self) -> List[AffineMap]:
        return self.translations + self.linear_parts

    def is_transitive(self) -> bool:
        return rank((m.shift for m in self.translations), self.dimension) == self.dimension

    @cached_property
    def neighbors(self) -> IntArray:
        """The neighbours of vertex 0 in the graph acted on, sorted."""
        h = self._columns
        if self.restrict_even:
            ends = np.unique((h[:, None] ^ h[None, :]).ravel())
            return np.sort(self._encode(ends[(ends != 0)]))
        return np.unique(h[h != 0])

    def graph(self, config: Optional[KitConfiguration] = None) -> CayleyGraph:
        """The coset graph, or its halved graph on the even cosets."""
        gamma = coset_graph(self.code, config)
        if not self.restrict_even:
            return gamma
        half = halved_graphs(gamma)[0]
        assert isinstance(half, CayleyGraph)
        return half

    def local_action(self) -> PermGroup:
        """The vertex-0 stabilizer acting on the neighbours of 0, indexed by position."""
        nbrs = self.neighbors
        gens = []
        for m in self.linear_parts:
            gens.append(Permutation(np.searchsorted(nbrs, m.apply(nbrs))))
        return PermGroup(nbrs.shape[0], gens or [Permutation.identity(nbrs.shape[0])])

    def order(self) -> int:
        """|translations| times |stabilizer of 0|; the neighbours of 0 span, so the local action is faithful."""
        return self.size * self.local_action().order()

    def as_permgroup(self, config: Optional[KitConfiguration] = None) -> PermGroup:
        limit = resolve_limits(config).max_materialized_action
        if self.size > limit:
            raise TooLargeError(self.size, limit, "affine action")
        points = np.arange(self.size, dtype=np.int64)
        gens = [Permutation(m.apply(points)) for m in self.generators]
        group = PermGroup(self.size, gens or [Permutation.identity(self.size)])
        logger.debug("materialized affine action on %d cosets, order %d", self.size, group.order())
        return group

    def __repr__(self) -> str:
        kind = "even cosets" if self.restrict_even else "cosets"
        return f"AffineAction({self.code!r}, {len(self.h_gens)} generators on {self.size} {kind})"


def affine_action(c: LinearCode, h_gens: Sequence[Permutation], restrict_even: bool = False) -> AffineAction:
    return AffineAction(c, h_gens, restrict_even)
