"""Constructors for the graph families used throughout the toolkit."""

from __future__ import annotations

import logging
from typing import Callable, Optional

import numpy as np

from .._core import IntArray, KitConfiguration, LoopsError, QuotientTooLargeError, resolve_limits
from ..gf2code.bitvector import BitVector, popcount
from ..gf2code.codes import LinearCode, even_weight_code, repetition_code
from ..gf2code.linalg import SubspaceCoordinates
from .base import CayleyGraph, ExplicitGraph, Graph
from .derived import induced_subgraph

logger = logging.getLogger(__name__)

_EVEN_BITS = 0x5555555555555555


def pair_index(i: int, j: int) -> int:
    """Colex index of the 0-indexed 2-subset {i, j}."""
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def pair_points(n: int) -> tuple[IntArray, IntArray]:
    """The 0-indexed 2-subsets of range(n) in colex order, as (low, high) arrays."""
    highs = np.repeat(np.arange(n, dtype=np.int64), np.arange(n, dtype=np.int64))
    starts = highs * (highs - 1) // 2
    lows = np.arange(highs.shape[0], dtype=np.int64) - starts
    return lows, highs


def _vector_labeler(n: int) -> Callable[[int], BitVector]:
    return lambda u: BitVector(n, int(u))


def hypercube(n: int) -> CayleyGraph:
    """The n-cube Q_n, implicit: vertex u is the packed vector u.

    Always a CayleyGraph with neighbours computed on demand. Call
    ``to_explicit()`` for stored adjacency lists; it is bounded by
    max_explicit_quotient_dimension.
    """
    if n < 1:
        raise ValueError("hypercube needs n >= 1")
    return CayleyGraph(n, [1 << i for i in range(n)], name=f"Q{n}", labeler=_vector_labeler(n))


def triangular(n: int) -> ExplicitGraph:
    """T_n: 2-subsets of [n] in colex order, adjacent iff they meet in one point."""
    if n < 2:
        raise ValueError("triangular needs n >= 2")
    lows, highs = pair_points(n)
    shared = (
        (lows[:, None] == lows[None, :]).astype(np.int8)
        + (lows[:, None] == highs[None, :])
        + (highs[:, None] == lows[None, :])
        + (highs[:, None] == highs[None, :])
    )
    labels = [(int(a) + 1, int(b) + 1) for a, b in zip(lows, highs)]
    return ExplicitGraph.from_adjacency_matrix(shared == 1, labels=labels, name=f"T{n}")


def complete(n: int) -> ExplicitGraph:
    if n < 1:
        raise ValueError("complete needs n >= 1")
    return ExplicitGraph.from_adjacency_matrix(~np.eye(n, dtype=bool), name=f"K{n}")


def complete_multipartite(parts: int, size: int) -> ExplicitGraph:
    """K_{parts[size]}; vertex ``p * size + s`` is member s of part p."""
    if parts < 1 or size < 1:
        raise ValueError("complete_multipartite needs positive parts and size")
    part = np.arange(parts * size) // size
    labels = [(int(v) // size, int(v) % size) for v in range(parts * size)]
    return ExplicitGraph.from_adjacency_matrix(part[:, None] != part[None, :], labels=labels, name=f"K{parts}[{size}]")


def complement(g: Graph) -> ExplicitGraph:
    eg = g.to_explicit()
    adj = eg.adjacency_matrix()
    comp = ~adj
    np.fill_diagonal(comp, False)
    return ExplicitGraph.from_adjacency_matrix(comp, labels=eg.labels, name=f"co-{g.name}" if g.name else "")


def petersen() -> ExplicitGraph:
    g = complement(triangular(5))
    g.name = "Petersen"
    return g


def coset_graph(c: LinearCode, config: Optional[KitConfiguration] = None) -> CayleyGraph:
    """Γ(C) in syndrome coordinates: x + C ~ x + e_i + C.

    Parallel edges collapse, so the connection set is the set of distinct column
    syndromes. The graph stays implicit; ``to_explicit`` enforces the
    materialization limit.
    """
    h = c.column_syndromes
    loops = [i + 1 for i, s in enumerate(h) if s == 0]
    if loops:
        raise LoopsError(loops)
    limit = resolve_limits(config).max_coset_dimension
    if c.codimension > limit:
        raise QuotientTooLargeError(c.codimension, limit, "coset graph")
    logger.debug("coset graph of [%d, %d] code: %d vertices, valency %d", c.n, c.r, 1 << c.codimension, len(set(h)))
    return CayleyGraph(c.codimension, sorted(set(h)), name=f"Gamma(C[{c.n},{c.r}])", code=c)


def folded_cube(n: int) -> CayleyGraph:
    g = coset_graph(repetition_code(n))
    g.name = f"Box{n}"
    return g


def _pair_swap(words: IntArray) -> IntArray:
    mask = np.int64(_EVEN_BITS)
    return ((words & mask) << 1) | ((words >> 1) & mask)


def _symplectic_form(xs: IntArray, ys: IntArray) -> IntArray:
    """B(x, y) = sum of x_{2i-1} y_{2i} + x_{2i} y_{2i-1}, elementwise."""
    return popcount(xs & _pair_swap(ys)) & 1


def symplectic_graph(m: int) -> ExplicitGraph:
    """Nonzero vectors of GF(2)^m, adjacent iff distinct and perpendicular.

    Vertex k is the vector k + 1.
    """
    if m < 2 or m % 2 or m > 12:
        raise ValueError("symplectic_graph needs an even dimension 2 <= m <= 12")
    vectors = np.arange(1, 1 << m, dtype=np.int64)
    perp = _symplectic_form(vectors[:, None], vectors[None, :]) == 0
    np.fill_diagonal(perp, False)
    return ExplicitGraph.from_adjacency_matrix(perp, labels=[BitVector(m, int(v)) for v in vectors], name=f"Sp{m}(2)")


def _bits(vectors: IntArray, i: int) -> IntArray:
    return (vectors >> (i - 1)) & 1


def _sp6_subgraph(keep: Callable[[IntArray], IntArray], name: str) -> ExplicitGraph:
    sp6 = symplectic_graph(6)
    vectors = np.arange(1, 64, dtype=np.int64)
    g = induced_subgraph(sp6, np.flatnonzero(keep(vectors) != 0), name=name)
    return g


def elliptic_quadric(vectors: IntArray) -> IntArray:
    """Q(x) = x1 x2 + x3 x4 + x5 + x5 x6 + x6, which polarizes to the standard form."""
    x = [_bits(vectors, i) for i in range(1, 7)]
    return (x[0] & x[1]) ^ (x[2] & x[3]) ^ x[4] ^ (x[4] & x[5]) ^ x[5]


def hyperbolic_quadric(vectors: IntArray) -> IntArray:
    """Q(x) = x1 x2 + x3 x4 + x5 x6."""
    x = [_bits(vectors, i) for i in range(1, 7)]
    return (x[0] & x[1]) ^ (x[2] & x[3]) ^ (x[4] & x[5])


def sp6_minus_elliptic_quadric() -> ExplicitGraph:
    """Sp6(2) graph induced on the 36 points off the elliptic quadric."""
    return _sp6_subgraph(elliptic_quadric, "Sp6(2)-Q-")


def sp6_minus_hyperbolic_quadric() -> ExplicitGraph:
    """Sp6(2) graph induced on the 28 points off the hyperbolic quadric."""
    return _sp6_subgraph(hyperbolic_quadric, "Sp6(2)-Q+")


def sp6_minus_hyperplane() -> ExplicitGraph:
    """Sp6(2) graph induced on the 32 vectors outside the hyperplane x1 = 0."""
    return _sp6_subgraph(lambda v: _bits(v, 1), "Sp6(2)-H")


def halved_cube_complement_without_antipodes(n: int) -> CayleyGraph:
    """Even-weight vectors of GF(2)^n, adjacent at even distance at least 4 other than n.

    Vertex ids are coordinates in the reduced basis of E_n.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    coords = SubspaceCoordinates(even_weight_code(n).rows, n)
    words = np.arange(1 << n, dtype=np.int64)
    weights = popcount(words)
    keep = words[(weights % 2 == 0) & (weights >= 4) & (weights != n)]
    return CayleyGraph(
        n - 1,
        coords.encode(keep),
        name=f"co-halfQ{n}-antipodes",
        labeler=lambda u: BitVector(n, coords.decode_one(int(u))),
        coordinates=coords,
    )
