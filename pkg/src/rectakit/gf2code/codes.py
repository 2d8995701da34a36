"""Binary linear codes in canonical reduced row-echelon form."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, List, Optional

import numpy as np

from .._core import DimensionTooLargeError, IntArray, KitConfiguration, LengthMismatchError, WordArray, resolve_limits
from .bitvector import MAX_LENGTH, BitVector, popcount
from .linalg import gather_bits, reduce_words, rref

logger = logging.getLogger(__name__)

INFINITY = math.inf

# Support of x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1, the generator polynomial of the
# cyclic [23,12,7] code. Coordinate i of the length-24 code holds the coefficient of
# x^(i-1) for i <= 23; coordinate 24 is the overall parity.
_GOLAY_GENERATOR_POLYNOMIAL = (0, 2, 4, 5, 6, 10, 11)


@dataclass(frozen=True)
class LinearCode:
    """A subspace of GF(2)^n stored by its unique reduced row-echelon basis.

    ``rows`` are integer-packed (coordinate i at bit i-1), sorted by pivot, and
    ``pivots`` are the 0-indexed pivot bit positions. Two codes are equal exactly
    when they are the same subspace.
    """

    n: int
    rows: tuple[int, ...] = ()
    pivots: tuple[int, ...] = field(default=(), compare=False)

    @property
    def r(self) -> int:
        return len(self.rows)

    @property
    def dimension(self) -> int:
        return len(self.rows)

    @property
    def codimension(self) -> int:
        return self.n - len(self.rows)

    @property
    def basis(self) -> List[BitVector]:
        return [BitVector(self.n, row) for row in self.rows]

    @cached_property
    def free_positions(self) -> tuple[int, ...]:
        """Non-pivot bit positions in increasing order; syndrome bit k reads position k."""
        pivots = set(self.pivots)
        return tuple(i for i in range(self.n) if i not in pivots)

    def _bits(self, v: BitVector | int) -> int:
        if isinstance(v, BitVector):
            if v.length != self.n:
                raise LengthMismatchError(self.n, v.length)
            return v.bits
        return int(v)

    def reduce(self, v: BitVector | int) -> int:
        word = self._bits(v)
        for p, row in zip(self.pivots, self.rows):
            if (word >> p) & 1:
                word ^= row
        return word

    def syndrome(self, v: BitVector | int) -> int:
        """Coset index of ``v``: its residue read off the non-pivot coordinates."""
        residue = self.reduce(v)
        return sum(((residue >> pos) & 1) << k for k, pos in enumerate(self.free_positions))

    def syndromes(self, words: WordArray | IntArray) -> IntArray:
        residue = reduce_words(np.asarray(words, dtype=np.uint64), self.rows, self.pivots)
        return gather_bits(residue, self.free_positions)

    def contains(self, v: BitVector | int) -> bool:
        return self.reduce(v) == 0

    membership = contains

    @cached_property
    def column_syndromes(self) -> tuple[int, ...]:
        """Syndrome h_i of each unit vector e_i, indexed by 0-based coordinate."""
        return tuple(self.syndrome(1 << i) for i in range(self.n))

    @cached_property
    def parity_checks(self) -> tuple[BitVector, ...]:
        """n - r checks spanning the dual code; check k is bit k of the column syndromes."""
        checks = []
        for k in range(self.codimension):
            bits = 0
            for i, h in enumerate(self.column_syndromes):
                if (h >> k) & 1:
                    bits |= 1 << i
            checks.append(BitVector(self.n, bits))
        return tuple(checks)

    def codewords(self, config: Optional[KitConfiguration] = None) -> WordArray:
        """All 2^r codewords as packed words in doubling order."""
        limit = resolve_limits(config).max_enumeration_dimension
        if self.r > limit:
            raise DimensionTooLargeError(self.r, limit)
        words = np.zeros(1, dtype=np.uint64)
        for row in self.rows:
            words = np.concatenate([words, words ^ np.uint64(row)])
        return words

    def to_strings(self) -> List[str]:
        return [b.to_string() for b in self.basis]

    def __repr__(self) -> str:
        return f"LinearCode(n={self.n}, r={self.r})"


def code_from_rows(n: int, rows: Iterable[BitVector | int]) -> LinearCode:
    """Canonical code spanned by ``rows``."""
    if not 1 <= n <= MAX_LENGTH:
        raise ValueError(f"code length must be between 1 and {MAX_LENGTH}")
    words = []
    for row in rows:
        if isinstance(row, BitVector):
            if row.length != n:
                raise LengthMismatchError(n, row.length)
            words.append(row.bits)
        else:
            if row < 0 or row >> n:
                raise LengthMismatchError(n, int(row).bit_length())
            words.append(int(row))
    basis, pivots = rref(words, n)
    return LinearCode(n, tuple(basis), tuple(pivots))


def weight_distribution(c: LinearCode, config: Optional[KitConfiguration] = None) -> IntArray:
    """Number of codewords of each weight 0..n."""
    weights = popcount(c.codewords(config))
    return np.bincount(weights, minlength=c.n + 1).astype(np.int64)


def min_distance(c: LinearCode, config: Optional[KitConfiguration] = None) -> int | float:
    """Minimum nonzero weight, or INFINITY for the zero code."""
    if c.r == 0:
        return INFINITY
    weights = popcount(c.codewords(config)[1:])
    return int(weights.min())


def is_even(c: LinearCode) -> bool:
    return all(row.bit_count() % 2 == 0 for row in c.rows)


def even_subcode(c: LinearCode) -> LinearCode:
    """The code C ∩ E_n."""
    odd = [row for row in c.rows if row.bit_count() % 2]
    if not odd:
        return c
    first = odd[0]
    rows = [row ^ first if row.bit_count() % 2 else row for row in c.rows if row != first]
    return code_from_rows(c.n, rows)


def dual_code(c: LinearCode) -> LinearCode:
    return code_from_rows(c.n, c.parity_checks)


def puncture(c: LinearCode, coordinate: int) -> LinearCode:
    """Delete 1-indexed ``coordinate`` from every codeword."""
    pos = coordinate - 1
    low = (1 << pos) - 1
    rows = [(row & low) | ((row >> (pos + 1)) << pos) for row in c.rows]
    return code_from_rows(c.n - 1, rows)


def zero_code(n: int) -> LinearCode:
    return code_from_rows(n, [])


def repetition_code(n: int) -> LinearCode:
    return code_from_rows(n, [(1 << n) - 1])


def even_weight_code(n: int) -> LinearCode:
    """E_n, spanned by e_{1,i} for 2 <= i <= n."""
    return code_from_rows(n, [1 | (1 << i) for i in range(1, n)])


def golay24() -> LinearCode:
    """The extended binary Golay code, a [24,12,8] code."""
    g = sum(1 << e for e in _GOLAY_GENERATOR_POLYNOMIAL)
    rows = []
    for shift in range(12):
        word = g << shift
        parity = word.bit_count() & 1
        rows.append(word | (parity << 23))
    return code_from_rows(24, rows)


def golay23() -> LinearCode:
    """The binary Golay code: golay24 punctured at coordinate 24."""
    return puncture(golay24(), 24)


def golay23_even() -> LinearCode:
    """The even-weight subcode of golay23, a [23,11,8] code."""
    return even_subcode(golay23())


BUILTIN_CODES = {
    "golay24": golay24,
    "golay23": golay23,
    "golay23-even": golay23_even,
}


def builtin_code(name: str, n: Optional[int] = None) -> LinearCode:
    """Look up a builtin code by name; ``zero`` and ``repetition`` take a length."""
    if name in BUILTIN_CODES:
        return BUILTIN_CODES[name]()
    if name in ("zero", "repetition", "even"):
        if n is None:
            raise ValueError(f"builtin code {name!r} needs a length")
        return {"zero": zero_code, "repetition": repetition_code, "even": even_weight_code}[name](n)
    raise KeyError(f"unknown builtin code {name!r}")


def parameters(c: LinearCode, config: Optional[KitConfiguration] = None) -> tuple[int, int, int | float]:
    """The triple [n, r, d]."""
    return c.n, c.r, min_distance(c, config)


def describe(c: LinearCode, config: Optional[KitConfiguration] = None) -> dict[str, object]:
    """Summary used by reports."""
    d = min_distance(c, config)
    info: dict[str, object] = {
        "n": c.n,
        "r": c.r,
        "d": None if d == INFINITY else d,
        "even": is_even(c),
        "rows": c.to_strings(),
    }
    logger.debug("code summary n=%d r=%d d=%s", c.n, c.r, info["d"])
    return info
