"""Maximal clique enumeration by pivoting Bron–Kerbosch on integer bitsets."""

from __future__ import annotations

from typing import Iterator, List

from .base import Graph


def adjacency_bitsets(g: Graph) -> List[int]:
    """Bit v of entry u is set iff u ~ v."""
    eg = g.to_explicit()
    sets = []
    for u in range(eg.order):
        mask = 0
        for v in eg.neighbors(u):
            mask |= 1 << int(v)
        sets.append(mask)
    return sets


def _members(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def maximal_cliques(g: Graph, min_size: int = 1) -> List[tuple[int, ...]]:
    """All maximal cliques with at least ``min_size`` vertices, each sorted, in sorted order."""
    adj = adjacency_bitsets(g)
    found: List[tuple[int, ...]] = []

    def expand(clique: int, size: int, candidates: int, excluded: int) -> None:
        if size + candidates.bit_count() < min_size:
            return
        if not candidates:
            if not excluded:
                found.append(tuple(_members(clique)))
            return
        pivot = max(_members(candidates | excluded), key=lambda p: (candidates & adj[p]).bit_count())
        for v in list(_members(candidates & ~adj[pivot])):
            bit = 1 << v
            expand(clique | bit, size + 1, candidates & adj[v], excluded & adj[v])
            candidates &= ~bit
            excluded |= bit

    if adj:
        expand(0, 0, (1 << len(adj)) - 1, 0)
    return sorted(found)


def clique_number(g: Graph) -> int:
    cliques = maximal_cliques(g)
    return max((len(c) for c in cliques), default=0)
