"""Tests for BFS distances, profiles and the rectagraph test."""

import numpy as np
import pytest

from rectakit._core import UNREACHABLE, DisconnectedError
from rectakit.gf2code import code_from_rows, repetition_code
from rectakit.graph import (
    INFINITY,
    ExplicitGraph,
    bfs_distances,
    bfs_layers,
    connected_components,
    coset_graph,
    diameter,
    distance_profile,
    girth,
    hypercube,
    is_bipartite,
    is_connected,
    is_rectagraph,
    two_coloring,
)

from .oracles import nx, random_graph, random_loopless_code, to_networkx

pytestmark = [pytest.mark.unit, pytest.mark.graph]


def path_graph(n: int) -> ExplicitGraph:
    return ExplicitGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def rectagraph_oracle(h) -> bool:
    """Connected, triangle-free and c2 = 2, checked with networkx."""
    if not nx.is_connected(h) or any(nx.triangles(h).values()):
        return False
    for u, lengths in nx.all_pairs_shortest_path_length(h, cutoff=2):
        for v, d in lengths.items():
            if d == 2 and len(list(nx.common_neighbors(h, u, v))) != 2:
                return False
    return True


class TestBreadthFirstSearch:
    """Test layered BFS."""

    def test_cube_layers(self, cube5):
        """Test that the shells of Q5 have binomial sizes."""
        assert [layer.shape[0] for layer in bfs_layers(cube5, 0)] == [1, 5, 10, 10, 5, 1]
        assert len(bfs_layers(cube5, 0, max_depth=2)) == 3

    def test_unreachable(self):
        """Test the sentinel for vertices in other components."""
        g = ExplicitGraph.from_edges(5, [(0, 1), (2, 3)])
        assert bfs_distances(g, 0).tolist() == [0, 1, UNREACHABLE, UNREACHABLE, UNREACHABLE]
        assert [c.tolist() for c in connected_components(g)] == [[0, 1], [2, 3], [4]]
        assert not is_connected(g)

    def test_diameter_of_disconnected_graph(self):
        """Test that the diameter of a disconnected graph is an error."""
        with pytest.raises(DisconnectedError):
            diameter(ExplicitGraph.from_edges(3, [(0, 1)]))

    @pytest.mark.parametrize("seed", range(120))
    def test_distances_match_networkx(self, seed):
        """Test bfs_distances, components and diameter against networkx."""
        g = random_graph(seed)
        h = to_networkx(g)
        expected = nx.single_source_shortest_path_length(h, 0)
        dist = bfs_distances(g, 0)
        assert {v: int(dist[v]) for v in range(g.order) if dist[v] != UNREACHABLE} == expected
        assert len(connected_components(g)) == nx.number_connected_components(h)
        assert is_bipartite(g) == nx.is_bipartite(h)
        if nx.is_connected(h):
            assert diameter(g) == nx.diameter(h)


class TestDistanceProfile:
    """Test c_i, a_i and b_i collection."""

    def test_cube_intersection_array(self, cube5):
        """Test Q5 has intersection array {5,4,3,2,1; 1,2,3,4,5}."""
        profile = distance_profile(cube5, 0)
        assert profile.shell_sizes == [1, 5, 10, 10, 5, 1]
        assert profile.intersection_array() == ([5, 4, 3, 2, 1], [1, 2, 3, 4, 5])
        assert all(a == [0] for a in profile.a_values)

    def test_golay_coset_graph_arrays(self, g23, g24):
        """Test the intersection arrays of Γ(C23) and Γ(C24)."""
        assert distance_profile(coset_graph(g23), 0).intersection_array() == ([23, 22, 21], [1, 2, 3])
        assert distance_profile(coset_graph(g24), 0).intersection_array() == ([24, 23, 22, 21], [1, 2, 3, 24])

    def test_max_distance_truncates(self, folded7):
        """Test that a truncated profile keeps exact b values."""
        profile = distance_profile(folded7, 0, max_distance=1)
        assert profile.shell_sizes == [1, 7]
        assert profile.b_values == [[7], [6]]

    def test_irregular_profile(self):
        """Test a path seen from an end and from the middle."""
        assert distance_profile(path_graph(5), 0).intersection_array() == ([1, 1, 1, 1], [1, 1, 1, 1])
        middle = distance_profile(path_graph(5), 2)
        assert middle.shell_sizes == [1, 2, 2]
        assert middle.b_values == [[2], [1], [0]]


class TestColoringAndGirth:
    """Test bipartiteness and girth."""

    def test_cayley_bipartite_test(self):
        """Test bipartiteness of odd and even folded cubes."""
        assert is_bipartite(hypercube(4))
        assert is_bipartite(coset_graph(repetition_code(6)))
        assert not is_bipartite(coset_graph(repetition_code(7)))

    def test_two_coloring(self):
        """Test a colouring of a path and its absence on a triangle."""
        assert two_coloring(path_graph(4)).tolist() == [0, 1, 0, 1]
        assert two_coloring(ExplicitGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])) is None

    def test_girth(self, cube5, k4, petersen_graph, folded7):
        """Test girth on cubes, complete graphs, Petersen and trees."""
        assert girth(cube5) == 4
        assert girth(k4) == 3
        assert girth(petersen_graph) == 5
        assert girth(folded7) == 4
        assert girth(path_graph(4)) == INFINITY

    def test_girth_of_odd_cycle(self):
        """Test odd girth detection."""
        cycle = ExplicitGraph.from_edges(7, [(i, (i + 1) % 7) for i in range(7)])
        assert girth(cycle) == 7


class TestRectagraph:
    """Test the rectagraph test on both representations."""

    def test_cubes_and_folded_cubes(self, cube5, folded7, g24):
        """Test positive cases."""
        assert is_rectagraph(cube5)
        assert is_rectagraph(folded7)
        assert is_rectagraph(coset_graph(g24))

    def test_triangle_witness(self, k4):
        """Test the witness for a triangle."""
        result = is_rectagraph(k4)
        assert not result
        assert result.reason == "triangle"
        u, v, w = result.witness
        assert k4.has_edge(u, v) and k4.has_edge(v, w) and k4.has_edge(u, w)

    def test_c2_witness(self, petersen_graph):
        """Test the witness for a pair with one common neighbour."""
        result = is_rectagraph(petersen_graph)
        assert result.reason == "c2"
        assert result.c2 == 1

    def test_folded_4_cube_has_c2_four(self):
        """Test that K_{4,4} fails with c2 = 4."""
        result = is_rectagraph(coset_graph(repetition_code(4)))
        assert result.reason == "c2"
        assert result.c2 == 4

    def test_disconnected(self):
        """Test that disconnected graphs fail."""
        result = is_rectagraph(ExplicitGraph.from_edges(4, [(0, 1), (2, 3)]))
        assert result.reason == "disconnected"

    def test_weight_four_codeword_breaks_c2(self):
        """Test that a weight-4 codeword gives pairs with four common neighbours."""
        result = is_rectagraph(coset_graph(code_from_rows(5, [0b01111])))
        assert result.reason == "c2"
        assert result.c2 == 4

    @pytest.mark.parametrize("seed", range(150))
    def test_coset_graphs_match_networkx(self, seed):
        """Test both representations against a networkx rectagraph check."""
        g = coset_graph(random_loopless_code(seed))
        expected = rectagraph_oracle(to_networkx(g))
        assert bool(is_rectagraph(g)) == expected
        assert bool(is_rectagraph(g.to_explicit())) == expected
        assert is_bipartite(g) == is_bipartite(g.to_explicit())
        assert diameter(g) == diameter(g.to_explicit())

    @pytest.mark.parametrize("seed", range(60))
    def test_random_graphs_match_networkx(self, seed):
        """Test random explicit graphs."""
        g = random_graph(10_000 + seed, low=6, high=12)
        assert bool(is_rectagraph(g)) == rectagraph_oracle(to_networkx(g))
