"""Tests for the affine action on coset graphs."""

import random

import numpy as np
import pytest

from rectakit._core import LengthMismatchError, NotAutomorphismError, NotEvenError, TooLargeError
from rectakit.gf2code import BitVector, code_from_rows, repetition_code, zero_code
from rectakit.graph import coset_graph, halved_graphs
from rectakit.permgroup import AffineMap, Permutation, a_n_gens, affine_action, m24_gens, s_n_gens

pytestmark = [pytest.mark.unit, pytest.mark.permgroup]


def preserves_edges(action, graph) -> bool:
    edges = graph.edges()
    for m in action.generators:
        if not graph.adjacent(m.apply(edges[:, 0]), m.apply(edges[:, 1])).all():
            return False
    return True


class TestAffineMap:
    """Test AffineMap composition."""

    def test_translation(self):
        """Test a pure translation."""
        t = AffineMap.translation(3, 0b101)
        assert t.is_translation
        assert t(0b011) == 0b110

    @pytest.mark.parametrize("seed", range(40))
    def test_product_applies_left_first(self, seed):
        """Test (a * b)(x) = b(a(x)) on random maps."""
        rng = random.Random(seed)
        dim = rng.randint(1, 6)
        a = AffineMap(tuple(rng.getrandbits(dim) for _ in range(dim)), rng.getrandbits(dim))
        b = AffineMap(tuple(rng.getrandbits(dim) for _ in range(dim)), rng.getrandbits(dim))
        points = np.arange(1 << dim, dtype=np.int64)
        assert np.array_equal((a * b).apply(points), b.apply(a.apply(points)))


class TestAffineAction:
    """Test AffineAction functionality."""

    def test_cube_automorphism_group(self):
        """Test that 2^5:S5 acting on Q5 has order 3840."""
        action = affine_action(zero_code(5), s_n_gens(5))
        assert action.size == 32
        assert len(action.translations) == 5
        assert action.is_transitive()
        assert action.order() == 32 * 120
        assert action.as_permgroup().order() == 3840
        assert action.local_action().order() == 120

    def test_generators_are_automorphisms(self, zero6):
        """Test that every generator preserves the coset graph and its halved graph."""
        for code in (zero6, repetition_code(6)):
            full = affine_action(code, s_n_gens(6))
            assert preserves_edges(full, full.graph())
            half = affine_action(code, a_n_gens(6), restrict_even=True)
            assert preserves_edges(half, half.graph())

    def test_neighbors_match_graph(self):
        """Test that the action's neighbours of 0 are the graph's."""
        for restrict in (False, True):
            action = affine_action(repetition_code(8), s_n_gens(8), restrict_even=restrict)
            assert action.neighbors.tolist() == action.graph().neighbors(0).tolist()

    def test_restricted_action_on_halved_cube(self):
        """Test 2^4:S5 on ½Q5."""
        action = affine_action(zero_code(5), s_n_gens(5), restrict_even=True)
        assert action.size == 16
        assert action.neighbors.shape[0] == 10
        assert action.order() == 16 * 120
        graph = action.graph()
        assert graph.order == 16
        assert graph.connection.tolist() == halved_graphs(coset_graph(zero_code(5)))[0].connection.tolist()

    def test_golay_action(self, g24):
        """Test 2^12:M24 on Γ(C24)."""
        action = affine_action(g24, m24_gens())
        assert action.size == 4096
        assert action.local_action().order() == 244823040
        assert preserves_edges(action, action.graph())

    def test_restrict_even_needs_even_code(self):
        """Test NotEvenError for odd codes."""
        with pytest.raises(NotEvenError):
            affine_action(repetition_code(5), s_n_gens(5), restrict_even=True)

    def test_non_automorphism(self):
        """Test that generators must preserve the code."""
        code = code_from_rows(4, [BitVector.from_string("1100")])
        with pytest.raises(NotAutomorphismError) as info:
            affine_action(code, [Permutation.from_cycles(4, [(1, 2)]), Permutation.from_cycles(4, [(2, 3)])])
        assert info.value.generator == 1

    def test_degree_mismatch(self):
        """Test that generators must act on the code length."""
        with pytest.raises(LengthMismatchError):
            affine_action(zero_code(4), s_n_gens(5))

    def test_materialization_limit(self, tight_config):
        """Test the guard on as_permgroup."""
        with pytest.raises(TooLargeError):
            affine_action(zero_code(7), s_n_gens(7)).as_permgroup(tight_config)

    def test_trivial_point_group(self):
        """Test the translation group alone."""
        action = affine_action(zero_code(4), [])
        assert action.order() == 16
        assert action.as_permgroup().order() == 16
