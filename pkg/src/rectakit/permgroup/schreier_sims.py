"""Base and strong generating sets by the incremental Schreier–Sims algorithm.

The chain G = G^(0) > G^(1) > ... > G^(k) = 1 has G^(i) the pointwise
stabilizer of the first i base points. Level i stores a transversal
``{beta: u_beta}`` of the fundamental orbit of base point i, with
``u_beta`` mapping the base point to beta.
"""

from __future__ import annotations

import logging
import math
from typing import Dict, Iterator, List, Optional, Sequence

import numpy as np

from .._core import LengthMismatchError
from .permutation import Permutation

logger = logging.getLogger(__name__)

Transversal = Dict[int, Permutation]


def _orbit_transversal(generators: Sequence[Permutation], alpha: int, identity: Permutation) -> Transversal:
    """Transversal for the orbit of ``alpha``, built breadth-first."""
    table = [(alpha, identity)]
    seen = {alpha}
    for x, px in table:
        for gen in generators:
            image = gen(x)
            if image not in seen:
                seen.add(image)
                table.append((image, px * gen))
    return dict(table)


def _distribute_gens_by_base(base: Sequence[int], gens: Sequence[Permutation], identity: Permutation) -> List[List[Permutation]]:
    """Entry i holds the generators that fix the first i base points."""
    stabs: List[List[Permutation]] = [[] for _ in base]
    deepest = 0
    for gen in gens:
        j = 0
        while j < len(base) - 1 and gen(base[j]) == base[j]:
            j += 1
        deepest = max(deepest, j)
        for k in range(j + 1):
            stabs[k].append(gen)
    for i in range(deepest + 1, len(base)):
        stabs[i].append(identity)
    return stabs


def _strip(
    h: Permutation, base: Sequence[int], transversals: Sequence[Transversal], start: int
) -> tuple[Optional[Permutation], int]:
    """Sift ``h`` from level ``start``; returns the residue and the level where it stopped."""
    for i in range(start, len(base)):
        beta = h(base[i])
        if beta == base[i]:
            continue
        u = transversals[i].get(beta)
        if u is None:
            return h, i
        h = h * u.inverse()
    return (None if h.is_identity() else h), len(base)


def _first_moved(perm: Permutation) -> int:
    return int(perm.support()[0])


def _schreier_sims_incremental(gens: Sequence[Permutation], base: Sequence[int], identity: Permutation) -> tuple[List[int], List[Permutation]]:
    base = list(base)
    gens = [g for g in gens if not g.is_identity()]
    if not gens:
        return base, []
    for gen in gens:
        if all(gen(b) == b for b in base):
            base.append(_first_moved(gen))
    distr = _distribute_gens_by_base(base, gens, identity)
    strong = list(gens)
    transversals = [_orbit_transversal(distr[i], alpha, identity) for i, alpha in enumerate(base)]

    i = len(base) - 1
    while i >= 0:
        restart = False
        for beta, u_beta in list(transversals[i].items()):
            for gen in distr[i]:
                u1 = transversals[i][gen(beta)]
                g1 = u_beta * gen
                if g1 == u1:
                    continue
                h, j = _strip(g1 * u1.inverse(), base, transversals, i + 1)
                if h is None:
                    continue
                if j == len(base):
                    base.append(_first_moved(h))
                    distr.append([])
                    transversals.append({base[-1]: identity})
                strong.append(h)
                for level in range(i + 1, j + 1):
                    distr[level].append(h)
                    transversals[level] = _orbit_transversal(distr[level], base[level], identity)
                logger.debug("Schreier-Sims: new strong generator at level %d, base length %d", j, len(base))
                i = j
                restart = True
                break
            if restart:
                break
        if not restart:
            i -= 1
    return base, strong


class PermGroup:
    """A permutation group with a verified stabilizer chain."""

    def __init__(self, degree: int, generators: Sequence[Permutation], base: Optional[Sequence[int]] = None) -> None:
        for g in generators:
            if g.degree != degree:
                raise LengthMismatchError(degree, g.degree, "degree")
        self.degree = degree
        self.generators = tuple(generators)
        self.identity = Permutation.identity(degree)
        self.base, self.strong_generators = _schreier_sims_incremental(self.generators, base or [], self.identity)
        distr = _distribute_gens_by_base(self.base, self.strong_generators, self.identity)
        self.transversals: List[Transversal] = [_orbit_transversal(distr[i], b, self.identity) for i, b in enumerate(self.base)]

    @property
    def basic_orbit_sizes(self) -> List[int]:
        return [len(t) for t in self.transversals]

    def order(self) -> int:
        return math.prod(self.basic_orbit_sizes)

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            raise LengthMismatchError(self.degree, g.degree, "degree")
        for b, transversal in zip(self.base, self.transversals):
            u = transversal.get(g(b))
            if u is None:
                return False
            g = g * u.inverse()
        return g.is_identity()

    __contains__ = contains

    def is_trivial(self) -> bool:
        return not self.strong_generators

    def orbit(self, point: int) -> List[int]:
        return sorted(_orbit_transversal(self.generators, point, self.identity))

    def orbits(self) -> List[List[int]]:
        """Orbits on the points, ordered by smallest point."""
        seen = np.zeros(self.degree, dtype=bool)
        result = []
        for p in range(self.degree):
            if not seen[p]:
                orb = self.orbit(p)
                seen[orb] = True
                result.append(orb)
        return result

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree if self.degree else True

    def rebased(self, prefix: Sequence[int]) -> PermGroup:
        """The same group with a chain whose base starts with ``prefix``."""
        return PermGroup(self.degree, self.strong_generators or [self.identity], base=prefix)

    def pointwise_stabilizer(self, points: Sequence[int]) -> PermGroup:
        """G_{p1,...,pk}, from a chain based at the points."""
        chain = self.rebased(points)
        k = len(points)
        gens = [g for g in chain.strong_generators if all(g(p) == p for p in points)]
        stab = PermGroup(self.degree, gens, base=chain.base[k:])
        expected = math.prod(chain.basic_orbit_sizes[k:])
        if stab.order() != expected:
            raise AssertionError("stabilizer order disagrees with the chain")
        return stab

    def stabilizer(self, point: int) -> PermGroup:
        return self.pointwise_stabilizer([point])

    def fundamental_orbit_sizes(self, prefix: Sequence[int]) -> List[int]:
        """Sizes of the basic orbits of a chain whose base starts with ``prefix``."""
        return self.rebased(prefix).basic_orbit_sizes[: len(prefix)]

    def elements(self) -> Iterator[Permutation]:
        """Every element, as products of transversal representatives."""

        def walk(level: int, prefix: Permutation) -> Iterator[Permutation]:
            if level < 0:
                yield prefix
                return
            for u in self.transversals[level].values():
                yield from walk(level - 1, prefix * u)

        yield from walk(len(self.transversals) - 1, self.identity)

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self.order()}, base={self.base})"


def schreier_sims(gens: Sequence[Permutation], base: Optional[Sequence[int]] = None) -> PermGroup:
    """Build the stabilizer chain of <gens>; the base prefers the smallest moved points."""
    if not gens:
        raise ValueError("schreier_sims needs at least one generator")
    return PermGroup(gens[0].degree, gens, base=base)


def order(group: PermGroup) -> int:
    return group.order()


def contains(group: PermGroup, g: Permutation) -> bool:
    return group.contains(g)


def stabilizer(group: PermGroup, point: int) -> PermGroup:
    return group.stabilizer(point)
