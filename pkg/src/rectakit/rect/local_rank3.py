"""Local actions of vertex stabilizers: the locally rank 3 test and its companions.

A group is given either as a :class:`PermGroup` on the vertices or as an
:class:`AffineAction` on a coset graph (or its halved graph). In the affine
case the group is (all translations) ⋊ H', so it is vertex-transitive and the
stabilizer of vertex 0 is the linear part; no chain on the vertex set is built.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Union

import numpy as np

from .._core import (
    HypothesesFailError,
    IntArray,
    KitConfiguration,
    LengthMismatchError,
    NotAutomorphismError,
    NotAutomorphismGroupError,
    VertexMap,
)
from ..gf2code import LinearCode, rank
from ..graph import CayleyGraph, Graph, coset_graph, girth, is_connected
from ..permgroup import (
    AffineAction,
    PermGroup,
    Permutation,
    affine_action,
    is_edge_transitive,
    is_k_homogeneous,
    is_k_transitive,
    orbit_labels,
    orbits,
    rank_on,
)
from .covering import check_hypotheses
from .models import LocalOrbitRecord, LocalRank3Certificate

logger = logging.getLogger(__name__)

GroupLike = Union[PermGroup, AffineAction]


@dataclass
class _LocalAction:
    representative: int
    neighbors: IntArray
    stabilizer_order: int
    local: PermGroup
    maps: Sequence[VertexMap]
    faithful: Optional[bool] = None


def _check_permutation_group(g: Graph, group: PermGroup, config: Optional[KitConfiguration]) -> None:
    if group.degree != g.order:
        raise LengthMismatchError(g.order, group.degree, "degree")
    edges = g.to_explicit(config).edges()
    for index, gen in enumerate(group.generators):
        ok = g.adjacent(gen.apply(edges[:, 0]), gen.apply(edges[:, 1]))
        if not bool(ok.all()):
            k = int(np.flatnonzero(~ok)[0])
            raise NotAutomorphismGroupError(index, (int(edges[k, 0]), int(edges[k, 1])))


def _check_affine(g: Graph, action: AffineAction) -> None:
    """Translations preserve any Cayley graph; each linear part must fix the connection set."""
    if not isinstance(g, CayleyGraph) or g.dimension != action.dimension:
        raise NotAutomorphismGroupError(0)
    conn = g.connection
    offset = len(action.translations)
    for index, m in enumerate(action.linear_parts):
        if not np.array_equal(np.sort(m.apply(conn)), conn):
            raise NotAutomorphismGroupError(offset + index)


def _restricted(nbrs: IntArray, maps: Sequence[VertexMap]) -> PermGroup:
    gens = [Permutation(np.searchsorted(nbrs, m.apply(nbrs))) for m in maps]
    return PermGroup(nbrs.shape[0], gens or [Permutation.identity(nbrs.shape[0])])


def _local_actions(g: Graph, group: GroupLike, config: Optional[KitConfiguration]) -> tuple[int, List[_LocalAction], Optional[bool]]:
    """Vertex-orbit count, the local action at each orbit representative, and edge-transitivity."""
    isolated = g.valency == 0 if isinstance(g, CayleyGraph) else bool((g.degrees() == 0).any())
    if isolated:
        raise HypothesesFailError("the graph has isolated vertices")
    if isinstance(group, AffineAction):
        _check_affine(g, group)
        if not group.is_transitive():
            return _local_actions(g, group.as_permgroup(config), config)
        if not is_connected(g):
            raise HypothesesFailError("the graph is disconnected")
        assert isinstance(g, CayleyGraph)
        local = _restricted(g.connection, group.linear_parts)
        # a linear map fixing a spanning set pointwise is the identity
        spans = rank((int(v) for v in g.connection), g.dimension) == g.dimension
        record = _LocalAction(0, g.connection, local.order(), local, group.linear_parts, faithful=spans)
        return 1, [record], local.is_transitive()
    _check_permutation_group(g, group, config)
    found = []
    vertex_orbits = orbits(group)
    for orbit in vertex_orbits:
        u = orbit[0]
        stab = group.stabilizer(u)
        nbrs = g.neighbors(u)
        found.append(_LocalAction(u, nbrs, stab.order(), _restricted(nbrs, stab.generators), stab.generators))
    edge_transitive = is_edge_transitive(g, group.generators, config)
    return len(vertex_orbits), found, edge_transitive


def _suborbits_match(g: Graph, action: _LocalAction) -> bool:
    """The stabilizer of v = Γ(u)[0] has orbits {v}, Γ(u)∩Γ(v) and Γ(u)∩Γ2(v) on Γ(u)."""
    nbrs = action.neighbors
    stab = action.local.stabilizer(0)
    labels = orbit_labels([h.images for h in stab.generators], nbrs.shape[0])
    key = np.where(g.adjacent(np.full(nbrs.shape[0], nbrs[0]), nbrs), 1, 2)
    key[0] = 0
    pairs = np.unique(labels * 3 + key)
    return pairs.shape[0] == np.unique(labels).shape[0] == np.unique(key).shape[0]


def _two_arc_labels(g: Graph, action: _LocalAction) -> tuple[IntArray, IntArray]:
    """Orbit labels of the stabilizer on the 2-arcs (u, v, w), and which of them close a triangle."""
    u = action.representative
    owners, ws = g.expand(action.neighbors)
    vs = action.neighbors[owners]
    keep = ws != u
    vs, ws = vs[keep], ws[keep]
    n = np.int64(g.order)
    keys = vs * n + ws
    order = np.argsort(keys)
    keys, vs, ws = keys[order], vs[order], ws[order]
    images = [np.searchsorted(keys, m.apply(vs) * n + m.apply(ws)) for m in action.maps]
    labels = orbit_labels(images, keys.shape[0])
    triangle = g.adjacent(np.full(ws.shape[0], u), ws)
    return labels, triangle


def _two_arc_split(labels: IntArray, triangle: IntArray) -> bool:
    """Exactly two orbits: the triangles and the 2-geodesics."""
    if bool(triangle.all()) or not bool(triangle.any()):
        return False
    return np.unique(labels[triangle]).shape[0] == 1 and np.unique(labels[~triangle]).shape[0] == 1 and np.unique(labels).shape[0] == 2


def _is_complete(g: Graph) -> bool:
    valency = g.valency
    return valency is not None and valency == g.order - 1


def locally_rank3_check(g: Graph, group: GroupLike, config: Optional[KitConfiguration] = None) -> LocalRank3Certificate:
    """Accept iff every vertex stabilizer is transitive of rank 3 on the neighbourhood."""
    vertex_orbits, actions, edge_transitive = _local_actions(g, group, config)
    shortest = girth(g)
    certificate = LocalRank3Certificate(
        n=int(actions[0].neighbors.shape[0]),
        accepted=True,
        vertex_orbits=vertex_orbits,
        edge_transitive=edge_transitive,
        girth=None if shortest == math.inf else int(shortest),
    )
    for action in actions:
        local_orbits = orbits(action.local)
        transitive = len(local_orbits) == 1
        record = LocalOrbitRecord(
            representative=action.representative,
            stabilizer_order=action.stabilizer_order,
            local_order=action.local.order(),
            local_orbit_sizes=[len(o) for o in local_orbits],
            transitive=transitive,
            faithful=action.faithful if action.faithful is not None else action.stabilizer_order == action.local.order(),
        )
        if transitive:
            record.rank = rank_on(action.local, config=config)
        accepted = transitive and record.rank == 3
        if accepted and shortest == 3 and not _is_complete(g):
            record.suborbits_match = _suborbits_match(g, action)
            labels, _ = _two_arc_labels(g, action)
            record.two_arc_orbit_sizes = sorted(int(c) for c in np.unique(labels, return_counts=True)[1])
        certificate.orbits.append(record)
        if not accepted and certificate.accepted:
            certificate.accepted = False
            certificate.reason = (
                f"vertex {action.representative}: rank {record.rank}" if transitive else f"vertex {action.representative}: {len(local_orbits)} local orbits"
            )
    logger.info("locally rank 3 check on %r: %s", g, "accepted" if certificate.accepted else certificate.reason)
    return certificate


def two_arc_orbit_check(g: Graph, group: GroupLike, config: Optional[KitConfiguration] = None) -> bool:
    """Each vertex stabilizer has two orbits on 2-arcs from its vertex: triangles and 2-geodesics."""
    if not is_connected(g):
        raise HypothesesFailError("the graph is disconnected")
    if _is_complete(g):
        raise HypothesesFailError("the graph is complete")
    if girth(g) != 3:
        raise HypothesesFailError("the graph has no triangles")
    _, actions, _ = _local_actions(g, group, config)
    for action in actions:
        labels, triangle = _two_arc_labels(g, action)
        if not _two_arc_split(labels, triangle):
            logger.debug("2-arcs at %d split into %d orbits", action.representative, np.unique(labels).shape[0])
            return False
    return True


def local_action(g: Graph, base: int, group: GroupLike, config: Optional[KitConfiguration] = None) -> PermGroup:
    """The group induced on Γ(base) by the stabilizer of base, on positions of the sorted neighbours."""
    if isinstance(group, AffineAction):
        _check_affine(g, group)
        assert isinstance(g, CayleyGraph)
        # conjugate the action at 0 by the translation 0 -> base
        ranked = np.argsort(np.argsort(np.int64(base) ^ g.connection))
        gens = []
        for m in group.linear_parts:
            p = np.searchsorted(g.connection, m.apply(g.connection))
            q = np.empty_like(p)
            q[ranked] = ranked[p]
            gens.append(Permutation(q))
        size = g.connection.shape[0]
        return PermGroup(size, gens or [Permutation.identity(size)])
    _check_permutation_group(g, group, config)
    return _restricted(g.neighbors(base), group.stabilizer(base).generators)


def four_homogeneous_local_check(target: Graph, base: int, group: GroupLike, config: Optional[KitConfiguration] = None) -> bool:
    """The stabilizer of base is 4-homogeneous on Γ(base)."""
    check_hypotheses(target, base)
    local = local_action(target, base, group, config)
    return local.degree >= 4 and is_k_homogeneous(local, 4)


def natural_local_action_check(target: Graph, base: int, group: GroupLike, config: Optional[KitConfiguration] = None) -> bool:
    """The stabilizer of base induces S_n or A_n in its natural action on Γ(base)."""
    check_hypotheses(target, base)
    local = local_action(target, base, group, config)
    full = math.factorial(local.degree)
    return local.is_transitive() and local.order() in (full, max(full // 2, 1))


def five_transitive_local_check(target: Graph, base: int, group: GroupLike, config: Optional[KitConfiguration] = None) -> bool:
    """The stabilizer of base is 5-transitive on Γ(base)."""
    check_hypotheses(target, base)
    local = local_action(target, base, group, config)
    return local.degree >= 5 and is_k_transitive(local, 5)


def coset_graph_automorphism_check(code: LinearCode, h_gens: Sequence[Permutation], config: Optional[KitConfiguration] = None) -> bool:
    """Every generator of (cosets) ⋊ H is an automorphism of Γ(C).

    Small coset spaces are checked edge by edge; larger ones through the
    connection set, which a linear map preserving it maps onto itself.
    """
    try:
        action = affine_action(code, h_gens)
    except NotAutomorphismError:
        return False
    gamma = coset_graph(code, config)
    if gamma.order <= 4096:
        edges = gamma.edges()
        return all(bool(gamma.adjacent(m.apply(edges[:, 0]), m.apply(edges[:, 1])).all()) for m in action.generators)
    conn = gamma.connection
    return all(np.array_equal(np.sort(m.apply(conn)), conn) for m in action.linear_parts)
