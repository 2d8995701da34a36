"""Tests for the generator file format."""

import pytest

from rectakit._core import InvalidFormatError
from rectakit.permgroup import Permutation, format_generators, parse_generators, read_generators, s_n_gens, write_generators

pytestmark = [pytest.mark.unit, pytest.mark.permgroup]


class TestGeneratorFormat:
    """Test reading and writing generator files."""

    def test_format(self):
        """Test the header and 1-indexed image lines."""
        assert format_generators(s_n_gens(3)) == "3 2\n2 1 3\n2 3 1\n"

    def test_file_round_trip(self, tmp_path):
        """Test write then read."""
        path = tmp_path / "s5.gens"
        write_generators(s_n_gens(5), path)
        assert read_generators(path) == s_n_gens(5)

    def test_parse(self):
        """Test parsing with blank lines."""
        gens = parse_generators("\n4 1\n\n2 1 4 3\n")
        assert gens == [Permutation.from_cycles(4, [(1, 2), (3, 4)])]

    @pytest.mark.parametrize(
        "text, line",
        [
            ("", 1),
            ("3\n", 1),
            ("3 2\n1 2 3\n", 1),
            ("3 1\n1 2\n", 2),
            ("3 1\n1 2 x\n", 2),
            ("3 1\n1 1 2\n", 2),
            ("3 1\n0 1 2\n", 2),
        ],
    )
    def test_invalid_input(self, text, line):
        """Test that malformed files report the offending line."""
        with pytest.raises(InvalidFormatError) as info:
            parse_generators(text)
        assert info.value.line == line
