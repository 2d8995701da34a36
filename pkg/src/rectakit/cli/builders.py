"""Resolve command-line inputs: graph family expressions, codes and groups.

A graph expression is a whitespace-separated prefix expression::

    cube 6 | folded-cube 7 | triangular 5 | complete 4 | multipartite 4 2
    symplectic 6 | sp6-minus-quadric | sp6-minus-hyperbolic-quadric | sp6-minus-hyperplane
    coset CODE | halved EXPR | double EXPR | distance-k K EXPR | component EXPR

where CODE is ``golay24``, ``golay23``, ``golay23-even``, ``zero N``,
``repetition N``, ``even N`` or a code file. Any graph argument that names an
existing file is read as an edge list instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
import re
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .._core import KitConfiguration
from ..gf2code import LinearCode, builtin_code, read_code
from ..graph import (
    Graph,
    bipartite_double,
    complete,
    complete_multipartite,
    component_graph,
    coset_graph,
    distance_k_graph,
    folded_cube,
    halved_graphs,
    hypercube,
    read_edge_list,
    sp6_minus_elliptic_quadric,
    sp6_minus_hyperbolic_quadric,
    sp6_minus_hyperplane,
    symplectic_graph,
    triangular,
)
from ..permgroup import (
    REGISTRY,
    AffineAction,
    PermGroup,
    Permutation,
    a_n_gens,
    affine_action,
    k_n_multipartite_groups,
    read_generators,
    registry_group,
    s_n_gens,
)
from .reports import fingerprint_file, fingerprint_text

FAMILIES = (
    "cube",
    "folded-cube",
    "triangular",
    "complete",
    "multipartite",
    "symplectic",
    "sp6-minus-quadric",
    "sp6-minus-hyperbolic-quadric",
    "sp6-minus-hyperplane",
    "coset",
    "halved",
    "double",
    "distance-k",
    "component",
)

_SIZED_CODES = ("zero", "repetition", "even")

_SIMPLE: Dict[str, Tuple[int, Callable[..., Graph]]] = {
    "cube": (1, hypercube),
    "folded-cube": (1, folded_cube),
    "triangular": (1, triangular),
    "complete": (1, complete),
    "multipartite": (2, complete_multipartite),
    "symplectic": (1, symplectic_graph),
    "sp6-minus-quadric": (0, sp6_minus_elliptic_quadric),
    "sp6-minus-hyperbolic-quadric": (0, sp6_minus_hyperbolic_quadric),
    "sp6-minus-hyperplane": (0, sp6_minus_hyperplane),
}


@dataclass
class Inputs:
    """Resolved inputs with the content fingerprint of each."""

    fingerprints: Dict[str, str] = field(default_factory=dict)

    def note_file(self, name: str, path: str | Path) -> None:
        self.fingerprints[name] = fingerprint_file(path)

    def note_text(self, name: str, text: str) -> None:
        self.fingerprints[name] = fingerprint_text(text)


def _integer(tokens: List[str], what: str) -> int:
    if not tokens:
        raise ValueError(f"{what} expects an integer parameter")
    token = tokens.pop(0)
    if not token.isdigit():
        raise ValueError(f"{what} expects an integer parameter, got {token!r}")
    return int(token)


def _take_code(tokens: List[str]) -> LinearCode:
    if not tokens:
        raise ValueError("expected a code name or code file")
    name = tokens.pop(0)
    if name in _SIZED_CODES:
        return builtin_code(name, _integer(tokens, name))
    if Path(name).is_file():
        return read_code(name)
    return builtin_code(name)


def _take_graph(tokens: List[str], config: Optional[KitConfiguration]) -> Graph:
    if not tokens:
        raise ValueError("expected a graph family")
    family = tokens.pop(0)
    if family in _SIMPLE:
        arity, make = _SIMPLE[family]
        return make(*[_integer(tokens, family) for _ in range(arity)])
    if family == "coset":
        return coset_graph(_take_code(tokens), config)
    if family == "halved":
        return halved_graphs(_take_graph(tokens, config))[0]
    if family == "double":
        return bipartite_double(_take_graph(tokens, config))
    if family == "distance-k":
        k = _integer(tokens, family)
        return distance_k_graph(_take_graph(tokens, config), k)
    if family == "component":
        return component_graph(_take_graph(tokens, config))
    raise ValueError(f"unknown graph family {family!r}; known: {', '.join(FAMILIES)}")


def build_family(tokens: Sequence[str], config: Optional[KitConfiguration] = None) -> Graph:
    """The graph described by a complete family expression."""
    rest = list(tokens)
    graph = _take_graph(rest, config)
    if rest:
        raise ValueError(f"unexpected trailing parameters: {' '.join(rest)}")
    return graph


def parse_code_spec(spec: str) -> LinearCode:
    """A code file, a builtin name, or ``zero:N`` / ``repetition:N`` / ``even:N``."""
    if Path(spec).is_file():
        return read_code(spec)
    return _take_code(spec.replace(":", " ").split())


def resolve_graph(spec: str, inputs: Inputs, name: str = "graph", config: Optional[KitConfiguration] = None) -> Graph:
    if Path(spec).is_file():
        inputs.note_file(name, spec)
        return read_edge_list(spec)
    inputs.note_text(name, spec)
    return build_family(spec.split(), config)


def resolve_code(spec: str, inputs: Inputs, name: str = "code") -> LinearCode:
    if Path(spec).is_file():
        inputs.note_file(name, spec)
    else:
        inputs.note_text(name, spec)
    return parse_code_spec(spec)


_SYMMETRIC = re.compile(r"^([SA])(\d+)$")


def group_generators(spec: str) -> List[Permutation]:
    """Generators named by a registry name, ``S<n>``, ``A<n>``, a K_{4[2]} group name or a file."""
    if Path(spec).is_file():
        return read_generators(spec)
    if spec in REGISTRY:
        return list(registry_group(spec).generators)
    multipartite = k_n_multipartite_groups()
    if spec in multipartite:
        return multipartite[spec]
    match = _SYMMETRIC.match(spec)
    if match:
        n = int(match.group(2))
        return s_n_gens(n) if match.group(1) == "S" else a_n_gens(n)
    known = [*REGISTRY, *multipartite, "S<n>", "A<n>"]
    raise KeyError(f"unknown group {spec!r}; known: {', '.join(known)}")


@dataclass
class GroupInput:
    """A graph together with the group acting on it."""

    graph: Graph
    group: PermGroup | AffineAction


def resolve_group(
    group_spec: str,
    inputs: Inputs,
    graph_spec: Optional[str] = None,
    code_spec: Optional[str] = None,
    halved: bool = False,
    config: Optional[KitConfiguration] = None,
) -> GroupInput:
    """With a code, the generators permute coordinates and act affinely on Γ(C) (or its
    even half); otherwise they must permute the vertices of the given graph."""
    if Path(group_spec).is_file():
        inputs.note_file("group", group_spec)
    else:
        inputs.note_text("group", group_spec)
    gens = group_generators(group_spec)
    if code_spec is not None:
        action = affine_action(resolve_code(code_spec, inputs), gens, restrict_even=halved)
        return GroupInput(action.graph(config), action)
    if graph_spec is None:
        raise ValueError("group checks need --graph or --code")
    graph = resolve_graph(graph_spec, inputs, config=config)
    return GroupInput(graph, PermGroup(graph.order, gens))
