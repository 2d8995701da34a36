"""Row reduction over GF(2) on integer-packed rows.

Rows are kept fully reduced with the pivot of each row at its lowest set bit
(the leftmost 1 in string notation), so a row has zeros at every other pivot.
That makes reduction order-independent: the residue of ``v`` is ``v`` XOR the
rows whose pivot bit is set in ``v``.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Sequence

import numpy as np

from .._core import IntArray, WordArray


class RowEchelon:
    """Incremental reduced row-echelon basis of a subspace of GF(2)^width."""

    __slots__ = ("width", "_rows")

    def __init__(self, width: int, rows: Iterable[int] = ()) -> None:
        self.width = width
        self._rows: Dict[int, int] = {}
        for row in rows:
            self.add(row)

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> List[int]:
        return sorted(self._rows)

    @property
    def rows(self) -> List[int]:
        return [self._rows[p] for p in sorted(self._rows)]

    def reduce(self, v: int) -> int:
        for p, row in self._rows.items():
            if (v >> p) & 1:
                v ^= row
        return v

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    def add(self, v: int) -> bool:
        """Add ``v`` to the span; returns False if it was already there."""
        r = self.reduce(v)
        if r == 0:
            return False
        p = (r & -r).bit_length() - 1
        for q, row in self._rows.items():
            if (row >> p) & 1:
                self._rows[q] = row ^ r
        self._rows[p] = r
        return True


def rref(rows: Iterable[int], width: int) -> tuple[List[int], List[int]]:
    """Reduced row-echelon rows and pivots (0-indexed bit positions) of a span."""
    echelon = RowEchelon(width, rows)
    return echelon.rows, echelon.pivots


def rank(rows: Iterable[int], width: int) -> int:
    return RowEchelon(width, rows).rank


def reduce_words(words: WordArray, rows: Sequence[int], pivots: Sequence[int]) -> WordArray:
    """Vectorized residue of each word after reduction by a reduced basis."""
    words = np.asarray(words, dtype=np.uint64)
    residue = words.copy()
    one = np.uint64(1)
    for p, row in zip(pivots, rows):
        mask = (words >> np.uint64(p)) & one
        residue ^= mask * np.uint64(row)
    return residue


def gather_bits(words: WordArray, positions: Sequence[int]) -> IntArray:
    """Pack the bits of ``words`` at ``positions`` into consecutive low bits."""
    words = np.asarray(words, dtype=np.uint64)
    out = np.zeros(words.shape, dtype=np.uint64)
    one = np.uint64(1)
    for k, pos in enumerate(positions):
        out |= ((words >> np.uint64(pos)) & one) << np.uint64(k)
    return out.astype(np.int64)


def xor_combine(selectors: IntArray, columns: Sequence[int]) -> IntArray:
    """For each selector word, XOR together ``columns[k]`` over its set bits ``k``.

    This is the vectorized form of a linear map given by its column images.
    """
    selectors = np.asarray(selectors, dtype=np.int64)
    out = np.zeros(selectors.shape, dtype=np.int64)
    for k, col in enumerate(columns):
        if col:
            out ^= ((selectors >> k) & 1) * np.int64(col)
    return out


class SubspaceCoordinates:
    """Coordinates of a subspace W of GF(2)^width through its reduced basis.

    ``encode`` sends w in W to the integer whose bit k is the coefficient of
    basis row k; ``decode`` is its inverse. Both are vectorized.
    """

    def __init__(self, generators: Iterable[int], width: int) -> None:
        self.width = width
        self._echelon = RowEchelon(width, generators)
        self.rows = self._echelon.rows
        self.pivots = self._echelon.pivots

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def contains(self, v: int) -> bool:
        return self._echelon.contains(v)

    def encode(self, values: IntArray) -> IntArray:
        values = np.asarray(values, dtype=np.int64)
        out = np.zeros(values.shape, dtype=np.int64)
        for k, p in enumerate(self.pivots):
            out |= ((values >> p) & 1) << k
        return out

    def decode(self, coords: IntArray) -> IntArray:
        return xor_combine(coords, self.rows)

    def encode_one(self, value: int) -> int:
        if not self.contains(value):
            raise ValueError(f"{value:#x} is not in the subspace")
        return sum(((value >> p) & 1) << k for k, p in enumerate(self.pivots))

    def decode_one(self, coords: int) -> int:
        out = 0
        for k, row in enumerate(self.rows):
            if (coords >> k) & 1:
                out ^= row
        return out
