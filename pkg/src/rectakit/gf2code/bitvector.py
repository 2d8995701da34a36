"""Bit-packed vectors over GF(2).

Coordinate ``i`` (1-indexed, as in every text format) is stored at bit ``i - 1``
of a Python integer, so a vector of length ``n <= 64`` is a single machine word.
Strings list coordinate 1 first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List

import numpy as np

from .._core import IntArray, LengthMismatchError, WordArray

MAX_LENGTH = 64


@dataclass(frozen=True, slots=True)
class BitVector:
    """A length-``length`` vector over GF(2)."""

    length: int
    bits: int = 0

    def __post_init__(self) -> None:
        if not 1 <= self.length <= MAX_LENGTH:
            raise ValueError(f"length must be between 1 and {MAX_LENGTH}, got {self.length}")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits beyond the vector length must be zero")

    @classmethod
    def zero(cls, length: int) -> BitVector:
        return cls(length, 0)

    @classmethod
    def ones(cls, length: int) -> BitVector:
        return cls(length, (1 << length) - 1)

    @classmethod
    def unit(cls, length: int, i: int) -> BitVector:
        """The unit vector e_i (1-indexed coordinate)."""
        return cls(length, 1 << (i - 1))

    @classmethod
    def pair(cls, length: int, i: int, j: int) -> BitVector:
        """The weight-two vector e_{i,j} = e_i + e_j."""
        if i == j:
            raise ValueError("e_{i,j} needs distinct coordinates")
        return cls(length, (1 << (i - 1)) | (1 << (j - 1)))

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> BitVector:
        bits = 0
        for i in support:
            bits |= 1 << (i - 1)
        return cls(length, bits)

    @classmethod
    def from_string(cls, text: str) -> BitVector:
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a binary string: {text!r}")
        bits = 0
        for k, ch in enumerate(text):
            if ch == "1":
                bits |= 1 << k
        return cls(len(text), bits)

    def to_string(self) -> str:
        return "".join("1" if (self.bits >> k) & 1 else "0" for k in range(self.length))

    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> List[int]:
        """Nonzero coordinates, 1-indexed and increasing."""
        return [k + 1 for k in range(self.length) if (self.bits >> k) & 1]

    def coordinate(self, i: int) -> int:
        return (self.bits >> (i - 1)) & 1

    def _check(self, other: BitVector) -> None:
        if other.length != self.length:
            raise LengthMismatchError(self.length, other.length)

    def __add__(self, other: BitVector) -> BitVector:
        self._check(other)
        return BitVector(self.length, self.bits ^ other.bits)

    __xor__ = __add__

    def dot(self, other: BitVector) -> int:
        self._check(other)
        return (self.bits & other.bits).bit_count() & 1

    def __str__(self) -> str:
        return self.to_string()


def weight(v: BitVector) -> int:
    """Population count of ``v``."""
    return v.weight()


def popcount(words: WordArray | IntArray) -> IntArray:
    """Vectorized population count."""
    return np.bitwise_count(words).astype(np.int64)


def lowest_bit(words: IntArray) -> IntArray:
    """Isolate the lowest set bit of every entry (0 stays 0)."""
    return words & -words


def lex_key(words: WordArray | IntArray, length: int) -> WordArray:
    """Sort key realizing lexicographic order with coordinate 1 most significant.

    This is the bit reversal of each word inside ``length`` bits.
    """
    words = np.asarray(words, dtype=np.uint64)
    key = np.zeros_like(words)
    one = np.uint64(1)
    for k in range(length):
        key |= ((words >> np.uint64(k)) & one) << np.uint64(length - 1 - k)
    return key


def bit_positions(word: int) -> List[int]:
    """0-indexed positions of the set bits of ``word``."""
    out = []
    while word:
        low = word & -word
        out.append(low.bit_length() - 1)
        word ^= low
    return out
