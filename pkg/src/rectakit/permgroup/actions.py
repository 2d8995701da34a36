"""Induced actions on derived domains and the orbit queries built on them."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, List, Optional, Sequence

import numpy as np

from .._core import IntArray, KitConfiguration, NotTransitiveError, VertexMap, as_int_array, resolve_limits
from ..graph.base import Graph
from .permutation import Permutation
from .schreier_sims import PermGroup

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiniteAction:
    """An action of permutations of ``range(degree)`` on ``range(size)``.

    ``induce(g)`` returns the image array of g on the domain.
    """

    degree: int
    size: int
    induce: Callable[[Permutation], IntArray]
    name: str = ""

    def permutation(self, g: Permutation) -> Permutation:
        return Permutation._trusted(as_int_array(self.induce(g)))


def natural_action(degree: int) -> FiniteAction:
    return FiniteAction(degree, degree, lambda g: g.images, name="natural")


@lru_cache(maxsize=64)
def subsets(n: int, k: int) -> IntArray:
    """The k-subsets of range(n) in colex order, one sorted row each."""
    rows: List[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...], top: int) -> None:
        if len(prefix) == k:
            rows.append(prefix[::-1])
            return
        for x in range(top - 1, k - len(prefix) - 2, -1):
            extend(prefix + (x,), x)

    extend((), n)
    table = np.array(rows[::-1], dtype=np.int64).reshape(-1, k)
    table.setflags(write=False)
    return table


@lru_cache(maxsize=64)
def _binomials(n: int, k: int) -> IntArray:
    table = np.array([[math.comb(x, j) for j in range(k + 1)] for x in range(n + 1)], dtype=np.int64)
    table.setflags(write=False)
    return table


def subset_rank(rows: IntArray, n: int) -> IntArray:
    """Colex rank of each sorted row: sum of C(x_j, j + 1)."""
    k = rows.shape[1]
    binom = _binomials(n, k)
    return binom[rows, np.arange(1, k + 1)].sum(axis=1)


def subset_action(n: int, k: int) -> FiniteAction:
    """Action on colex-indexed k-subsets of range(n)."""
    table = subsets(n, k)

    def induce(g: Permutation) -> IntArray:
        return subset_rank(np.sort(g.images[table], axis=1), n)

    return FiniteAction(n, table.shape[0], induce, name=f"{k}-subsets")


def pair_action(n: int) -> FiniteAction:
    """Action on 2-subsets {i, j}, i < j, indexed by j(j-1)/2 + i."""
    return subset_action(n, 2)


def induced_group(group: PermGroup, action: FiniteAction) -> PermGroup:
    gens = [action.permutation(g) for g in group.generators] or [Permutation.identity(action.size)]
    return PermGroup(action.size, gens)


def orbit_labels(generator_images: Sequence[IntArray], size: int) -> IntArray:
    """Label of each point = smallest point in its orbit."""
    labels = np.arange(size, dtype=np.int64)
    images = [as_int_array(img) for img in generator_images]
    while True:
        before = labels.copy()
        for img in images:
            np.minimum.at(labels, img, labels.copy())
            labels = np.minimum(labels, labels[img])
        labels = labels[labels]
        if np.array_equal(labels, before):
            return labels


def _orbits_from_labels(labels: IntArray) -> List[List[int]]:
    order = np.argsort(labels, kind="stable")
    _, starts = np.unique(labels[order], return_index=True)
    return [sorted(int(p) for p in chunk) for chunk in np.split(order, starts[1:])]


def orbits(group: PermGroup, action: Optional[FiniteAction] = None) -> List[List[int]]:
    """Orbits on the action domain (the points when ``action`` is None), by smallest element."""
    if action is None:
        action = natural_action(group.degree)
    labels = orbit_labels([action.induce(g) for g in group.generators], action.size)
    return _orbits_from_labels(labels)


def is_transitive(group: PermGroup, action: Optional[FiniteAction] = None) -> bool:
    return len(orbits(group, action)) == 1


def orbit_count_on_ordered_pairs(group: PermGroup, action: Optional[FiniteAction] = None) -> int:
    """Number of orbits on ordered pairs (x, y) of the domain, diagonal included."""
    if action is None:
        action = natural_action(group.degree)
    m = action.size
    pair_images = []
    for g in group.generators:
        img = as_int_array(action.induce(g))
        pair_images.append((img[:, None] * m + img[None, :]).ravel())
    labels = orbit_labels(pair_images, m * m)
    return int(np.unique(labels).shape[0])


def rank_on(group: PermGroup, action: Optional[FiniteAction] = None, config: Optional[KitConfiguration] = None) -> int:
    """Number of orbits of a point stabilizer of a transitive action."""
    if action is None:
        action = natural_action(group.degree)
    count = len(orbits(group, action))
    if count != 1:
        raise NotTransitiveError(count)
    induced = group if action.name == "natural" else induced_group(group, action)
    stab = induced.stabilizer(0)
    rank = len(_orbits_from_labels(orbit_labels([g.images for g in stab.generators], action.size)))
    if action.size <= resolve_limits(config).max_ordered_pair_crosscheck:
        crosscheck = orbit_count_on_ordered_pairs(group, action)
        if crosscheck != rank:
            raise AssertionError(f"rank {rank} disagrees with {crosscheck} orbits on ordered pairs")
    logger.debug("rank on %s action of size %d: %d", action.name, action.size, rank)
    return rank


def is_k_homogeneous(group: PermGroup, k: int) -> bool:
    """Transitive on k-subsets of the points."""
    if not 0 <= k <= group.degree:
        raise ValueError("need 0 <= k <= degree")
    if k == 0:
        return True
    return is_transitive(group, subset_action(group.degree, k))


def is_k_transitive(group: PermGroup, k: int) -> bool:
    """Transitive on ordered k-tuples of distinct points, via a chain based at 0..k-1."""
    n = group.degree
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= degree")
    if k == 0:
        return True
    sizes = group.fundamental_orbit_sizes(list(range(k)))
    return sizes == [n - i for i in range(k)]


def transitivity_degree(group: PermGroup) -> int:
    """Largest k with the group k-transitive."""
    k = 0
    while k < group.degree and is_k_transitive(group, k + 1):
        k += 1
    return k


def vertex_orbits(order: int, maps: Sequence[VertexMap]) -> List[List[int]]:
    """Orbits of the group generated by ``maps`` on ``range(order)``."""
    points = np.arange(order, dtype=np.int64)
    return _orbits_from_labels(orbit_labels([m.apply(points) for m in maps], order))


def edge_orbit_count(order: int, edges: IntArray, maps: Sequence[VertexMap]) -> int:
    """Number of orbits on the sorted edge array (u < v); the maps must be automorphisms."""
    edges = as_int_array(edges).reshape(-1, 2)
    if edges.shape[0] == 0:
        return 0
    n = order
    keys = edges[:, 0] * n + edges[:, 1]
    images = []
    for m in maps:
        a, b = m.apply(edges[:, 0]), m.apply(edges[:, 1])
        images.append(np.searchsorted(keys, np.minimum(a, b) * n + np.maximum(a, b)))
    return int(np.unique(orbit_labels(images, edges.shape[0])).shape[0])


def is_edge_transitive(g: Graph, maps: Sequence[VertexMap], config: Optional[KitConfiguration] = None) -> bool:
    """True iff the group generated by ``maps`` has one orbit on the edges of g."""
    return edge_orbit_count(g.order, g.to_explicit(config).edges(), maps) == 1
