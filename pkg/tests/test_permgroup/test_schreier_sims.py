"""Tests for stabilizer chains."""

import math
import random

import pytest

from rectakit._core import LengthMismatchError
from rectakit.permgroup import PermGroup, Permutation, a_n_gens, contains, order, s_n_gens, schreier_sims, stabilizer

pytestmark = [pytest.mark.unit, pytest.mark.permgroup]


def closure_order(gens: list[Permutation]) -> int:
    """Group order by breadth-first closure, for small degrees."""
    identity = Permutation.identity(gens[0].degree)
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return len(seen)


class TestPermGroup:
    """Test PermGroup functionality."""

    @pytest.mark.parametrize("n", range(1, 10))
    def test_symmetric_group_orders(self, n):
        """Test |S_n| = n!."""
        assert PermGroup(n, s_n_gens(n)).order() == math.factorial(n)

    @pytest.mark.parametrize("n", range(3, 10))
    def test_alternating_group_orders(self, n):
        """Test |A_n| = n!/2."""
        assert PermGroup(n, a_n_gens(n)).order() == math.factorial(n) // 2

    def test_membership(self):
        """Test that A_n contains even permutations only."""
        a5 = schreier_sims(a_n_gens(5))
        assert contains(a5, Permutation.from_cycles(5, [(1, 2), (3, 4)]))
        assert not a5.contains(Permutation.from_cycles(5, [(1, 2)]))
        assert Permutation.from_cycles(5, [(1, 3, 5)]) in a5

    def test_membership_degree_mismatch(self):
        """Test that membership needs the group degree."""
        with pytest.raises(LengthMismatchError):
            PermGroup(4, s_n_gens(4)).contains(Permutation.identity(5))
        with pytest.raises(LengthMismatchError):
            PermGroup(4, s_n_gens(5))

    def test_stabilizers(self):
        """Test point and pointwise stabilizers of S6."""
        s6 = PermGroup(6, s_n_gens(6))
        assert order(stabilizer(s6, 2)) == 120
        assert s6.pointwise_stabilizer([0, 4]).order() == 24
        assert all(g(2) == 2 for g in s6.stabilizer(2).generators)

    def test_orbits(self):
        """Test orbits of an intransitive group."""
        group = PermGroup(6, [Permutation.from_cycles(6, [(1, 2, 3)]), Permutation.from_cycles(6, [(4, 5)])])
        assert group.orbits() == [[0, 1, 2], [3, 4], [5]]
        assert not group.is_transitive()
        assert group.order() == 6

    def test_elements(self):
        """Test that elements lists each element once."""
        s4 = PermGroup(4, s_n_gens(4))
        elements = list(s4.elements())
        assert len(elements) == 24
        assert len(set(elements)) == 24

    def test_rebased_chain(self):
        """Test that a chain with a prescribed base prefix has the same order."""
        a6 = PermGroup(6, a_n_gens(6))
        rebased = a6.rebased([5, 4])
        assert rebased.base[:2] == [5, 4]
        assert rebased.order() == 360
        assert a6.fundamental_orbit_sizes([0, 1, 2]) == [6, 5, 4]

    def test_trivial_group(self):
        """Test the identity group."""
        group = PermGroup(3, [Permutation.identity(3)])
        assert group.is_trivial()
        assert group.order() == 1

    def test_needs_generators(self):
        """Test that schreier_sims needs a generator to know the degree."""
        with pytest.raises(ValueError):
            schreier_sims([])

    @pytest.mark.parametrize("seed", range(150))
    def test_random_groups_match_closure(self, seed):
        """Test order and membership of random groups against brute-force closure."""
        rng = random.Random(seed)
        n = rng.randint(2, 6)
        gens = [Permutation(rng.sample(range(n), n)) for _ in range(rng.randint(1, 3))]
        group = schreier_sims(gens)
        assert group.order() == closure_order(gens)
        word = Permutation.identity(n)
        for _ in range(5):
            word = word * rng.choice(gens)
        assert group.contains(word)
        for b, transversal in zip(group.base, group.transversals):
            for beta, u in transversal.items():
                assert u(b) == beta
