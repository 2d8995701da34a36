"""Tests for derived graphs and quotients."""

import numpy as np
import pytest

from rectakit._core import DisconnectedError
from rectakit.gf2code import BitVector, code_from_rows, repetition_code
from rectakit.graph import (
    CayleyGraph,
    ExplicitGraph,
    VertexPartition,
    bipartite_double,
    complete_multipartite,
    component_graph,
    coset_graph,
    coset_partition,
    distance_k_graph,
    folded_cube,
    halved_graphs,
    hypercube,
    induced_neighborhood,
    induced_subgraph,
    is_bipartite,
    is_connected,
    isomorphic,
    quotient_by_partition,
)

from .oracles import nx, random_graph, to_networkx

pytestmark = [pytest.mark.unit, pytest.mark.graph]


class TestInducedSubgraphs:
    """Test induced subgraphs and local graphs."""

    def test_parent_map(self, cube5):
        """Test that local vertex k is parent[k]."""
        sub = induced_subgraph(cube5, [7, 3, 1, 5])
        assert sub.parent.tolist() == [1, 3, 5, 7]
        assert sub.edge_count == 4
        for u, v in sub.edges():
            assert cube5.has_edge(int(sub.parent[u]), int(sub.parent[v]))

    def test_local_graph_of_cube_is_empty(self, cube5):
        """Test that a triangle-free graph has edgeless neighbourhoods."""
        local = induced_neighborhood(cube5, 9)
        assert local.order == 5
        assert local.edge_count == 0

    @pytest.mark.parametrize("seed", range(40))
    def test_matches_networkx_subgraph(self, seed):
        """Test edge counts of induced subgraphs against networkx."""
        g = random_graph(500 + seed)
        members = list(range(0, g.order, 2))
        assert induced_subgraph(g, members).edge_count == to_networkx(g).subgraph(members).number_of_edges()


class TestDistanceKGraphs:
    """Test distance-k graphs."""

    def test_cayley_distance_two(self, cube5):
        """Test that the distance-2 graph of Q5 has valency 10."""
        g = distance_k_graph(cube5, 2)
        assert isinstance(g, CayleyGraph)
        assert g.valency == 10
        assert not is_connected(g)

    def test_explicit_distance_graph(self, petersen_graph):
        """Test that distance 2 in the Petersen graph gives T5."""
        g = distance_k_graph(petersen_graph, 2)
        assert g.valency == 6
        assert distance_k_graph(petersen_graph, 3).edge_count == 0

    def test_invalid_k(self, cube5):
        """Test that k must be positive."""
        with pytest.raises(ValueError):
            distance_k_graph(cube5, 0)

    def test_component(self, cube5):
        """Test the even-weight component of the distance-2 graph."""
        comp = component_graph(distance_k_graph(cube5, 2))
        assert comp.order == 16
        assert all(BitVector(5, int(v)).weight() % 2 == 0 for v in comp.parent)


class TestHalvedGraphs:
    """Test halved graphs of bipartite graphs."""

    def test_halved_cube(self, k42):
        """Test that both halves of Q4 are K_{4[2]}."""
        halves = halved_graphs(hypercube(4))
        assert len(halves) == 2
        for half in halves:
            assert (half.order, half.valency) == (8, 6)
            assert isomorphic(half, k42) is not None

    def test_halves_keep_labels(self):
        """Test that the first half holds the even vectors and the second the odd ones."""
        even, odd = halved_graphs(hypercube(5))
        assert {even.label(u).weight() % 2 for u in range(even.order)} == {0}
        assert {odd.label(u).weight() % 2 for u in range(odd.order)} == {1}
        assert even.label(0) == BitVector.zero(5)
        assert np.array_equal(np.sort(even.parent_vertices(np.arange(16))), np.sort([w for w in range(32) if bin(w).count("1") % 2 == 0]))

    def test_explicit_halves(self):
        """Test halving an explicit bipartite graph."""
        halves = halved_graphs(hypercube(3).to_explicit())
        assert [h.order for h in halves] == [4, 4]
        assert all(h.valency == 3 for h in halves)
        assert 0 in halves[0].parent

    def test_non_bipartite_gives_distance_two(self, petersen_graph):
        """Test the single result for a non-bipartite graph."""
        (only,) = halved_graphs(petersen_graph)
        assert only.valency == 6

    def test_disconnected(self):
        """Test that disconnected inputs are rejected."""
        with pytest.raises(DisconnectedError):
            halved_graphs(ExplicitGraph.from_edges(4, [(0, 1), (2, 3)]))

    def test_halved_coset_graph(self, g24):
        """Test that the even half of Γ(C24) has 2048 vertices and valency 276."""
        half = halved_graphs(coset_graph(g24))[0]
        assert (half.order, half.valency) == (2048, 276)


class TestBipartiteDouble:
    """Test Γ.2."""

    def test_double_of_folded_cube(self):
        """Test that the double of Box5 is Q5."""
        double = bipartite_double(folded_cube(5))
        assert isinstance(double, CayleyGraph)
        assert is_bipartite(double)
        assert isomorphic(double, hypercube(5)) is not None

    def test_double_of_explicit_graph(self, petersen_graph):
        """Test the double of the Petersen graph."""
        double = bipartite_double(petersen_graph)
        assert (double.order, double.valency) == (20, 3)
        assert is_bipartite(double)
        assert double.label(12) == (petersen_graph.label(2), 1)

    def test_double_of_bipartite_graph_is_disconnected(self, cube5):
        """Test that doubling a bipartite graph gives two copies."""
        assert not is_connected(bipartite_double(cube5))


class TestQuotients:
    """Test quotients and the covering test."""

    def test_coset_partition_quotient_is_coset_graph(self):
        """Test Q5 / repetition code equals Γ(repetition code)."""
        c = repetition_code(5)
        partition = coset_partition(c)
        assert partition.size == 16
        quotient = quotient_by_partition(hypercube(5), partition)
        assert quotient.covering
        assert quotient.loops == ()
        assert np.array_equal(quotient.graph.edges(), coset_graph(c).edges())

    def test_collapsing_quotient_is_not_covering(self):
        """Test a partition that puts two neighbours of a vertex in one block."""
        quotient = quotient_by_partition(hypercube(4), coset_partition(code_from_rows(4, [0b0011])))
        assert not quotient.covering
        assert quotient.loops == ()

    def test_loops(self):
        """Test a partition with an edge inside a block."""
        quotient = quotient_by_partition(hypercube(3), coset_partition(code_from_rows(3, [0b001])))
        assert not quotient.covering
        assert len(quotient.loops) == 4

    def test_partition_validation(self):
        """Test VertexPartition constructors."""
        assert VertexPartition.from_labels([5, 2, 5, 9]).block_of.tolist() == [1, 0, 1, 2]
        assert VertexPartition.singletons(3).size == 3
        assert [b.tolist() for b in VertexPartition.from_blocks(4, [[1, 3], [0, 2]]).blocks] == [[1, 3], [0, 2]]
        with pytest.raises(ValueError):
            VertexPartition.from_blocks(3, [[0, 1], [1, 2]])
        with pytest.raises(ValueError):
            VertexPartition.from_blocks(3, [[0, 1]])
        with pytest.raises(ValueError):
            VertexPartition(np.array([0, 2]))

    def test_size_mismatch(self, cube5):
        """Test that the partition must cover the graph."""
        with pytest.raises(ValueError):
            quotient_by_partition(cube5, VertexPartition.singletons(4))

    def test_multipartite_quotient(self, k42):
        """Test that K_{4[2]} modulo its parts is K4 but not a covering."""
        quotient = quotient_by_partition(k42, VertexPartition.from_labels([v // 2 for v in range(8)]))
        assert quotient.graph.edge_count == 6
        assert not quotient.covering

    @pytest.mark.parametrize("parts", [2, 3, 5])
    def test_quotient_matches_networkx(self, parts):
        """Test the quotient edge set against networkx.quotient_graph."""
        g = complete_multipartite(parts, 3)
        labels = [v // 3 for v in range(g.order)]
        quotient = quotient_by_partition(g, VertexPartition.from_labels(labels))
        blocks = [set(range(3 * p, 3 * p + 3)) for p in range(parts)]
        assert quotient.graph.edge_count == nx.quotient_graph(to_networkx(g), blocks).number_of_edges()
