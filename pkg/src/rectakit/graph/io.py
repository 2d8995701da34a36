"""Edge-list files and distance-distribution diagrams in DOT."""

from __future__ import annotations

from pathlib import Path
from typing import List, Optional

import numpy as np

from .._core import DisconnectedError, InvalidFormatError, KitConfiguration
from .base import ExplicitGraph, Graph
from .distances import connected_components, distance_profile, is_connected
from .models import DistanceProfile


def format_edge_list(g: Graph, config: Optional[KitConfiguration] = None) -> str:
    """Header ``N M`` followed by the sorted edges ``u v`` with u < v."""
    edges = g.to_explicit(config).edges()
    lines = [f"{g.order} {edges.shape[0]}"]
    lines.extend(f"{int(u)} {int(v)}" for u, v in edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> ExplicitGraph:
    lines = [(k, line.split()) for k, line in enumerate(text.splitlines(), start=1) if line.strip()]
    if not lines:
        raise InvalidFormatError("edge list", 1, "empty input")
    k, header = lines[0]
    if len(header) != 2 or not all(field.isdigit() for field in header):
        raise InvalidFormatError("edge list", k, "expected 'N M'")
    n, m = int(header[0]), int(header[1])
    if len(lines) - 1 != m:
        raise InvalidFormatError("edge list", k, f"header announces {m} edges, found {len(lines) - 1}")
    edges = []
    seen: set[tuple[int, int]] = set()
    for k, fields in lines[1:]:
        if len(fields) != 2 or not all(field.isdigit() for field in fields):
            raise InvalidFormatError("edge list", k, "expected 'u v'")
        u, v = int(fields[0]), int(fields[1])
        if not u < v < n:
            raise InvalidFormatError("edge list", k, f"need 0 <= u < v < {n}")
        if (u, v) in seen:
            raise InvalidFormatError("edge list", k, f"duplicate edge {u} {v}")
        seen.add((u, v))
        edges.append((u, v))
    return ExplicitGraph.from_edges(n, np.array(edges, dtype=np.int64).reshape(-1, 2))


def read_edge_list(path: str | Path) -> ExplicitGraph:
    return parse_edge_list(Path(path).read_text())


def write_edge_list(g: Graph, path: str | Path, config: Optional[KitConfiguration] = None) -> None:
    Path(path).write_text(format_edge_list(g, config))


def _values(values: List[int]) -> str:
    return ",".join(str(v) for v in values)


def format_diagram(profile: DistanceProfile, name: str = "distance_diagram") -> str:
    """DOT text: one node per shell labelled with k_i, edges labelled with b_i and c_{i+1}."""
    lines = [f"graph {name} {{", "  rankdir=LR;", '  node [shape=circle, fontname="Helvetica"];']
    for i, size in enumerate(profile.shell_sizes):
        lines.append(f'  s{i} [label="{size}", xlabel="a={_values(profile.a_values[i])}"];')
    for i in range(profile.depth):
        label = f"b={_values(profile.b_values[i])} c={_values(profile.c_values[i + 1])}"
        lines.append(f'  s{i} -- s{i + 1} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def distance_diagram(g: Graph, u: int = 0) -> str:
    """The distance distribution diagram of a connected graph around ``u``."""
    if not is_connected(g):
        raise DisconnectedError(len(connected_components(g)))
    return format_diagram(distance_profile(g, u))
