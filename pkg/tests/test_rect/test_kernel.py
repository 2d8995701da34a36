"""Tests for kernel codes, twist data and quotient coverings."""

import json

import numpy as np
import pytest

from rectakit._core import HypothesesFailError
from rectakit.gf2code import BitVector, code_from_rows, even_weight_code, repetition_code, spin_submodule, zero_code
from rectakit.graph import VertexPartition, coset_graph, coset_partition, folded_cube
from rectakit.permgroup import Permutation, m24_gens, s_n_gens
from rectakit.rect import (
    CodeSummary,
    KernelReport,
    build_covering,
    contains_even_weight_code,
    coset_isomorphism,
    kernel_invariance_check,
    kernel_report,
    quotient_covering,
    reconstruct_code,
    twisted_translation_partition,
)

pytestmark = [pytest.mark.unit, pytest.mark.rect]

# (1 2 3 4)(5 6 7 8) followed by adding e1 + e5 + e9 generates a free group of order 8 on Q9
TWIST = Permutation.from_cycles(9, [(1, 2, 3, 4), (5, 6, 7, 8)])
TWIST_SHIFT = 0b100010001


class TestKernelReport:
    """Test the fibre over the base vertex."""

    def test_cube(self, cube5):
        """Test Q5 -> Q5 has the zero code as kernel."""
        report = kernel_report(build_covering(cube5))
        assert report.linear
        assert report.fibre == [0]
        assert report.rank == 0
        assert report.to_code() == zero_code(5)
        assert report.isomorphism_verified is True
        assert report.twist_data == []

    def test_folded_cube(self, folded7):
        """Test Q7 -> Box7 has the repetition code as kernel."""
        report = kernel_report(build_covering(folded7))
        assert report.fibre_size == 2
        assert report.fibre == [0, 127]
        assert report.code.rows == ["1111111"]
        assert report.to_code() == repetition_code(7)
        assert report.isomorphism_verified

    def test_fibre_times_order(self, folded7):
        """Test |fibre| × |V| = 2^n."""
        cov = build_covering(folded7)
        report = kernel_report(cov)
        assert report.fibre_size * cov.target.order == 1 << report.n

    def test_json_field_order(self, folded7):
        """Test the serialized key order."""
        data = json.loads(kernel_report(build_covering(folded7)).model_dump_json())
        assert list(data)[:4] == ["n", "fibre_size", "linear", "code"]
        assert data["code"] == {"n": 7, "dimension": 1, "rows": ["1111111"]}

    def test_code_summary(self):
        """Test the summary rebuilds its code."""
        code = even_weight_code(6)
        summary = CodeSummary.of(code)
        assert summary.dimension == 5
        assert summary.to_code() == code


class TestCosetIsomorphism:
    """Test x + C -> image_of(x)."""

    def test_kernel_code(self, folded7):
        """Test the map is a bijection for the kernel code."""
        cov = build_covering(folded7)
        mapping = coset_isomorphism(cov, repetition_code(7))
        assert mapping is not None
        assert sorted(mapping.tolist()) == list(range(64))

    def test_wrong_code(self, folded7):
        """Test that a code smaller than the kernel does not give a bijection."""
        assert coset_isomorphism(build_covering(folded7), zero_code(7)) is None


class TestReconstructCode:
    """Test end-to-end code reconstruction."""

    @pytest.mark.parametrize(
        "code",
        [zero_code(4), zero_code(6), repetition_code(7), repetition_code(8), repetition_code(11)],
        ids=["zero4", "zero6", "rep7", "rep8", "rep11"],
    )
    def test_round_trip(self, code):
        """Test reconstruct_code(Γ(C)) = C."""
        assert reconstruct_code(coset_graph(code)) == code

    def test_from_another_base(self):
        """Test that the base vertex does not change the code."""
        assert reconstruct_code(folded_cube(9), base=17) == repetition_code(9)

    @pytest.mark.slow
    @pytest.mark.parametrize("name", ["g24", "g23", "g23_even"])
    def test_golay_round_trips(self, name, request):
        """Test the Golay codes and the even subcode of C23."""
        code = request.getfixturevalue(name)
        assert reconstruct_code(coset_graph(code)) == code


class TestKernelInvariance:
    """Test H-invariance and E_n exclusion."""

    def test_repetition_code(self, folded7):
        """Test the repetition code under S7."""
        report = kernel_report(build_covering(folded7))
        assert kernel_invariance_check(report, s_n_gens(7))

    def test_zero_code(self, cube5):
        """Test the zero code under any generators."""
        report = kernel_report(build_covering(cube5))
        assert kernel_invariance_check(report, s_n_gens(5))
        assert kernel_invariance_check(report, [])

    def test_code_containing_even_weight_code(self):
        """Test that a code spun up to E_n is rejected."""
        code = spin_submodule(s_n_gens(6), 6, [0b11])
        assert code == even_weight_code(6)
        report = KernelReport(n=6, fibre_size=32, linear=True, code=CodeSummary.of(code), rank=5)
        assert not kernel_invariance_check(report, s_n_gens(6))

    def test_non_invariant_code(self):
        """Test that a code moved by a generator is rejected."""
        code = code_from_rows(4, [BitVector.from_string("1100")])
        report = KernelReport(n=4, fibre_size=2, linear=True, code=CodeSummary.of(code), rank=1)
        assert not kernel_invariance_check(report, s_n_gens(4))

    def test_non_linear_report(self):
        """Test that a non-linear kernel is rejected."""
        report = KernelReport(n=3, fibre_size=3, linear=False, rank=2)
        with pytest.raises(HypothesesFailError):
            kernel_invariance_check(report, [])

    def test_contains_even_weight_code(self):
        """Test E_n ⊆ C."""
        assert contains_even_weight_code(even_weight_code(5))
        assert contains_even_weight_code(code_from_rows(3, [1, 2, 4]))
        assert not contains_even_weight_code(repetition_code(5))
        assert not contains_even_weight_code(code_from_rows(3, [0b011, 0b100]))

    @pytest.mark.slow
    def test_golay_code(self, g24):
        """Test C24 is M24-invariant."""
        report = kernel_report(build_covering(coset_graph(g24)))
        assert kernel_invariance_check(report, m24_gens())


class TestQuotientCovering:
    """Test coverings of cube quotients."""

    def test_coset_partition(self):
        """Test the quotient by a code recovers the code."""
        cov = quotient_covering(7, coset_partition(repetition_code(7)))
        assert cov.target.order == 64
        report = kernel_report(cov)
        assert report.linear
        assert report.to_code() == repetition_code(7)

    def test_twisted_translation_orbits(self):
        """Test the twisted translation has eight-element orbits."""
        partition = twisted_translation_partition(9, TWIST, TWIST_SHIFT)
        assert partition.size == 64
        assert all(block.shape[0] == 8 for block in partition.blocks)

    def test_non_linear_kernel(self):
        """Test twist data on the quotient of Q9 by a free cyclic group of order 8."""
        cov = quotient_covering(9, twisted_translation_partition(9, TWIST, TWIST_SHIFT))
        report = kernel_report(cov)
        assert not report.linear
        assert report.fibre_size == 8
        assert report.rank > 3
        assert report.code is None
        assert report.isomorphism_verified is None
        assert len(report.twist_data) == 8
        assert report.twist_data[0].fibre_element == "000000000"
        assert report.twist_data[0].sigma == list(range(1, 10))

    def test_twist_pairs_neighbours(self):
        """Test y + e_{sigma(i)} lies over the image of e_i."""
        cov = quotient_covering(9, twisted_translation_partition(9, TWIST, TWIST_SHIFT))
        report = kernel_report(cov)
        for entry in report.twist_data:
            y = BitVector.from_string(entry.fibre_element).bits
            assert sorted(entry.sigma) == list(range(1, 10))
            for i, j in enumerate(entry.sigma):
                assert cov.image_of[y ^ (1 << (j - 1))] == cov.neighbor_order[i]

    def test_not_a_covering(self):
        """Test that blocks containing an edge are rejected."""
        partition = VertexPartition(np.arange(8, dtype=np.int64) >> 1)
        with pytest.raises(HypothesesFailError):
            quotient_covering(3, partition)

    def test_dimension_limit(self, tight_config):
        """Test the cube dimension guard."""
        with pytest.raises(HypothesesFailError):
            quotient_covering(9, twisted_translation_partition(9, TWIST, TWIST_SHIFT), tight_config)
