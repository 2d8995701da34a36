"""Tests for the graph constructors."""

import numpy as np
import pytest

from rectakit._core import LoopsError, QuotientTooLargeError
from rectakit.gf2code import BitVector, code_from_rows, repetition_code, zero_code
from rectakit.graph import (
    CayleyGraph,
    ExplicitGraph,
    complement,
    complete,
    complete_multipartite,
    component_graph,
    coset_graph,
    diameter,
    distance_k_graph,
    folded_cube,
    girth,
    halved_cube_complement_without_antipodes,
    hypercube,
    is_locally,
    isomorphic,
    pair_index,
    pair_points,
    petersen,
    sp6_minus_elliptic_quadric,
    sp6_minus_hyperbolic_quadric,
    sp6_minus_hyperplane,
    symplectic_graph,
    triangular,
)

pytestmark = [pytest.mark.unit, pytest.mark.graph]


class TestBasicFamilies:
    """Test the small named families."""

    def test_hypercube(self, cube5):
        """Test Q5 as an implicit Cayley graph."""
        assert isinstance(cube5, CayleyGraph)
        assert (cube5.order, cube5.valency, cube5.edge_count) == (32, 5, 80)
        assert cube5.label(0b00101) == BitVector.from_string("10100")
        assert cube5.neighbors(0).tolist() == [1, 2, 4, 8, 16]
        assert cube5.has_edge(3, 7)
        assert not cube5.has_edge(3, 12)

    def test_hypercube_materializes_on_request(self, tight_config):
        """Test that Q_n stays implicit until to_explicit() is called."""
        cube = hypercube(4)
        assert isinstance(cube, CayleyGraph)
        explicit = cube.to_explicit(tight_config)
        assert isinstance(explicit, ExplicitGraph)
        assert {tuple(e) for e in explicit.edges().tolist()} == {tuple(e) for e in cube.edges().tolist()}
        assert all(explicit.neighbors(u).tolist() == cube.neighbors(u).tolist() for u in cube.vertices)

    def test_pair_ordering(self):
        """Test the colex order of 2-subsets."""
        lows, highs = pair_points(4)
        assert list(zip(lows.tolist(), highs.tolist())) == [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]
        assert [pair_index(i, j) for i, j in zip(lows, highs)] == list(range(6))
        assert pair_index(3, 1) == pair_index(1, 3)

    def test_triangular(self, t5):
        """Test T5 and its pair labels."""
        assert (t5.order, t5.valency) == (10, 6)
        assert t5.label(0) == (1, 2)
        assert t5.label(3) == (1, 4)
        assert t5.has_edge(0, 1)
        assert not t5.has_edge(0, 5)

    def test_complete_and_multipartite(self, k4, k42):
        """Test K4 and K_{4[2]}."""
        assert (k4.order, k4.valency, k4.edge_count) == (4, 3, 6)
        assert (k42.order, k42.valency) == (8, 6)
        assert not k42.has_edge(0, 1)
        assert k42.label(5) == (2, 1)

    def test_petersen_is_complement_of_t5(self, petersen_graph, t5):
        """Test the Petersen graph."""
        assert (petersen_graph.order, petersen_graph.valency) == (10, 3)
        assert girth(petersen_graph) == 5
        assert diameter(petersen_graph) == 2
        assert isomorphic(petersen_graph, complement(t5)) is not None

    @pytest.mark.parametrize("maker", [hypercube, triangular, complete])
    def test_invalid_sizes(self, maker):
        """Test that degenerate sizes are rejected."""
        with pytest.raises(ValueError):
            maker(0)
        with pytest.raises(ValueError):
            complete_multipartite(0, 2)


class TestCosetGraphs:
    """Test coset graphs in syndrome coordinates."""

    def test_zero_code_gives_the_cube(self, zero6):
        """Test Γ(0) = Q_n with identical connection sets."""
        g = coset_graph(zero6)
        assert g.connection.tolist() == hypercube(6).connection.tolist()
        assert g.code == zero6

    def test_folded_cube(self, folded7):
        """Test Box7 from the repetition code."""
        assert (folded7.order, folded7.valency) == (64, 7)
        assert diameter(folded7) == 3
        assert folded_cube(7).connection.tolist() == folded7.connection.tolist()
        assert folded_cube(7).name == "Box7"

    def test_parallel_edges_collapse(self):
        """Test that equal column syndromes give one neighbour."""
        c = code_from_rows(4, [BitVector.from_string("1100")])
        g = coset_graph(c)
        assert g.order == 8
        assert g.valency == 3

    def test_loops_are_rejected(self):
        """Test that a code containing e_i gives a loop at coordinate i."""
        with pytest.raises(LoopsError) as info:
            coset_graph(code_from_rows(5, [BitVector.unit(5, 2), BitVector.pair(5, 3, 4)]))
        assert info.value.coordinates == [2]

    def test_quotient_limit(self, tight_config, g24):
        """Test the codimension guard."""
        with pytest.raises(QuotientTooLargeError):
            coset_graph(g24, tight_config)
        with pytest.raises(QuotientTooLargeError):
            hypercube(7).to_explicit(tight_config)

    def test_golay_coset_graphs(self, g23, g24):
        """Test order, valency and diameter of Γ(C23) and Γ(C24)."""
        gamma23 = coset_graph(g23)
        gamma24 = coset_graph(g24)
        assert (gamma23.order, gamma23.valency, diameter(gamma23)) == (2048, 23, 3)
        assert (gamma24.order, gamma24.valency, diameter(gamma24)) == (4096, 24, 4)

    def test_to_explicit_keeps_adjacency(self, folded7):
        """Test that materializing a Cayley graph keeps its edges."""
        explicit = folded7.to_explicit()
        assert np.array_equal(explicit.edges(), folded7.edges())
        assert explicit.valency == 7


class TestSymplecticGraphs:
    """Test the Sp(2m, 2) graphs and their subgraphs."""

    def test_sp4(self):
        """Test that Sp4(2) is 6-regular on 15 vertices."""
        g = symplectic_graph(4)
        assert (g.order, g.valency) == (15, 6)
        assert g.label(0) == BitVector(4, 1)

    def test_sp6(self):
        """Test that Sp6(2) is 30-regular on 63 vertices."""
        g = symplectic_graph(6)
        assert (g.order, g.valency) == (63, 30)

    def test_odd_dimension_is_rejected(self):
        """Test that the symplectic form needs an even dimension."""
        with pytest.raises(ValueError):
            symplectic_graph(5)

    def test_elliptic_quadric_complement(self):
        """Test the 36-vertex graph off the elliptic quadric, locally co-T6."""
        g = sp6_minus_elliptic_quadric()
        assert g.order == 36
        assert diameter(g) == 2
        assert is_locally(g, complement(triangular(6)))

    def test_hyperplane_complement(self):
        """Test the 32-vertex graph off a hyperplane, locally co-T6."""
        g = sp6_minus_hyperplane()
        assert g.order == 32
        assert diameter(g) == 3
        assert is_locally(g, complement(triangular(6)))

    def test_hyperplane_complement_models(self):
        """Test two other descriptions of the hyperplane complement."""
        g = sp6_minus_hyperplane()
        far = component_graph(distance_k_graph(hypercube(6), 4))
        assert far.order == 32
        assert isomorphic(g, far) is not None
        assert isomorphic(g, halved_cube_complement_without_antipodes(6)) is not None

    def test_hyperbolic_quadric_complement(self):
        """Test that the 28 points off the hyperbolic quadric form co-T8."""
        g = sp6_minus_hyperbolic_quadric()
        co_t8 = complement(triangular(8))
        assert g.order == 28
        assert isomorphic(g, co_t8) is not None
        assert is_locally(co_t8, complement(triangular(6)))


class TestHalvedCubeComplement:
    """Test the even-weight graph at distances 4 .. n-2."""

    def test_connection_set(self):
        """Test order and valency for n = 6 and n = 8."""
        g6 = halved_cube_complement_without_antipodes(6)
        assert (g6.order, g6.valency) == (32, 15)
        g8 = halved_cube_complement_without_antipodes(8)
        assert (g8.order, g8.valency) == (128, 70 + 28)

    def test_labels_are_even_vectors(self):
        """Test that vertex labels decode to even-weight vectors."""
        g = halved_cube_complement_without_antipodes(6)
        assert all(g.label(u).weight() % 2 == 0 for u in range(g.order))
        assert g.label(0) == BitVector.zero(6)


class TestZeroCodeSizes:
    """Test coset graphs across lengths."""

    @pytest.mark.parametrize("n", range(3, 11))
    def test_repetition_and_zero(self, n):
        """Test orders and valencies of Q_n and Box_n."""
        assert coset_graph(zero_code(n)).order == 1 << n
        box = coset_graph(repetition_code(n))
        assert (box.order, box.valency) == (1 << (n - 1), n)
