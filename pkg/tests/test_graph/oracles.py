"""networkx oracles and random inputs shared by the graph tests."""

import random

import pytest

from rectakit.gf2code import LinearCode, code_from_rows
from rectakit.graph import ExplicitGraph, Graph

nx = pytest.importorskip("networkx")


def to_networkx(g: Graph) -> "nx.Graph":
    """The same graph as a networkx graph on nodes 0..order-1."""
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from((int(u), int(v)) for u, v in g.edges())
    return h


def from_networkx(h: "nx.Graph") -> ExplicitGraph:
    return ExplicitGraph.from_edges(h.number_of_nodes(), list(h.edges()))


def random_graph(seed: int, low: int = 4, high: int = 10) -> ExplicitGraph:
    rng = random.Random(seed)
    n = rng.randint(low, high)
    return from_networkx(nx.gnp_random_graph(n, rng.uniform(0.2, 0.7), seed=seed))


def random_loopless_code(seed: int, max_length: int = 8) -> LinearCode:
    """A random code with no coordinate inside it, so its coset graph has no loops."""
    rng = random.Random(seed)
    while True:
        n = rng.randint(3, max_length)
        c = code_from_rows(n, [rng.getrandbits(n) for _ in range(rng.randint(0, n - 2))])
        if all(c.column_syndromes):
            return c
