"""Bit-packed GF(2) algebra and binary linear codes."""

from .bitvector import BitVector, weight, popcount, lex_key
from .linalg import RowEchelon, SubspaceCoordinates, rref, rank
from .codes import (
    INFINITY,
    LinearCode,
    code_from_rows,
    min_distance,
    weight_distribution,
    is_even,
    even_subcode,
    dual_code,
    puncture,
    zero_code,
    repetition_code,
    even_weight_code,
    golay24,
    golay23,
    golay23_even,
    builtin_code,
    parameters,
    describe,
)
from .cosets import CosetSpace, coset_space
from .actions import permute_coordinates, permute_word, permute_words, is_code_automorphism, spin_submodule
from .io import read_code, write_code, parse_code, format_code

__all__ = [
    "BitVector",
    "weight",
    "popcount",
    "lex_key",
    "RowEchelon",
    "SubspaceCoordinates",
    "rref",
    "rank",
    "INFINITY",
    "LinearCode",
    "code_from_rows",
    "min_distance",
    "weight_distribution",
    "is_even",
    "even_subcode",
    "dual_code",
    "puncture",
    "zero_code",
    "repetition_code",
    "even_weight_code",
    "golay24",
    "golay23",
    "golay23_even",
    "builtin_code",
    "parameters",
    "describe",
    "CosetSpace",
    "coset_space",
    "permute_coordinates",
    "permute_word",
    "permute_words",
    "is_code_automorphism",
    "spin_submodule",
    "read_code",
    "write_code",
    "parse_code",
    "format_code",
]
