"""Tests for the rectagraph over a locally triangular graph."""

import pytest

from rectakit._core import NotLocallyTriangularError
from rectakit.graph import coset_graph, distance_profile, halved_graphs, hypercube, is_bipartite, is_locally_triangular, is_rectagraph, isomorphic
from rectakit.rect import rectagraph_over, vertex_cliques

pytestmark = [pytest.mark.unit, pytest.mark.rect]


@pytest.fixture
def half6():
    return halved_graphs(hypercube(6))[0]


class TestVertexCliques:
    """Test the cliques {u} ∪ star."""

    def test_halved_cube(self, half6):
        """Test ½Q6 has as many 6-cliques as vertices."""
        n, cliques = vertex_cliques(half6)
        assert n == 6
        assert cliques.shape == (32, 6)
        for row in cliques:
            for a in row:
                assert all(half6.has_edge(int(a), int(b)) for b in row if b != a)

    def test_explicit_agrees_with_cayley(self, half6):
        """Test both representations find the same cliques."""
        _, implicit = vertex_cliques(half6)
        _, explicit = vertex_cliques(half6.to_explicit())
        assert implicit.tolist() == explicit.tolist()

    def test_not_locally_triangular(self, petersen_graph):
        """Test the error names a vertex."""
        with pytest.raises(NotLocallyTriangularError) as info:
            vertex_cliques(petersen_graph)
        assert info.value.vertex == 0


class TestRectagraphOver:
    """Test the clique incidence graph."""

    def test_halved_six_cube(self, half6):
        """Test Π over ½Q6 is Q6."""
        pi = rectagraph_over(half6)
        assert pi.order == 64
        assert is_bipartite(pi)
        assert is_rectagraph(pi)
        assert isomorphic(pi, hypercube(6)) is not None

    def test_halved_graph_of_the_result(self):
        """Test the first half of Π is the input again."""
        g = halved_graphs(hypercube(7))[0]
        assert is_locally_triangular(g) == 7
        pi = rectagraph_over(g)
        assert pi.order == 128
        assert isomorphic(halved_graphs(pi)[0], g) is not None

    def test_small_valency(self, k42):
        """Test that T_4 neighbourhoods give the 4-cube directly."""
        pi = rectagraph_over(k42)
        assert pi.order == 16
        assert isomorphic(pi, hypercube(4)) is not None

    def test_not_locally_triangular(self, t5):
        """Test T5 is rejected."""
        with pytest.raises(NotLocallyTriangularError):
            rectagraph_over(t5)

    @pytest.mark.slow
    def test_halved_golay_graph(self, g24):
        """Test Π over ½Γ(C24) has the intersection numbers of Γ(C24)."""
        gamma = coset_graph(g24)
        pi = rectagraph_over(halved_graphs(gamma)[0])
        assert pi.order == 4096
        expected = distance_profile(gamma, 0)
        found = distance_profile(pi, 0)
        assert found.b_values == expected.b_values
        assert found.c_values == expected.c_values
