"""Coordinate-permutation actions on vectors and codes, and submodule spinning."""

from __future__ import annotations

import logging
from collections import deque
from typing import Iterable, Sequence

import numpy as np

from .._core import IntArray, LengthMismatchError, PermutationLike, WordArray
from .bitvector import BitVector
from .codes import LinearCode, code_from_rows
from .linalg import RowEchelon

logger = logging.getLogger(__name__)


def permute_word(word: int, images: Sequence[int] | IntArray) -> int:
    """Right action on a packed word: bit i moves to bit images[i]."""
    out = 0
    i = 0
    while word:
        if word & 1:
            out |= 1 << int(images[i])
        word >>= 1
        i += 1
    return out


def permute_words(words: WordArray, images: IntArray) -> WordArray:
    """Vectorized :func:`permute_word`."""
    words = np.asarray(words, dtype=np.uint64)
    out = np.zeros_like(words)
    one = np.uint64(1)
    for i, target in enumerate(images):
        out |= ((words >> np.uint64(i)) & one) << np.uint64(int(target))
    return out


def permute_coordinates(v: BitVector, sigma: PermutationLike) -> BitVector:
    """The vector v^sigma, whose coordinate i^sigma is coordinate i of v."""
    if sigma.degree != v.length:
        raise LengthMismatchError(v.length, sigma.degree, "degree")
    return BitVector(v.length, permute_word(v.bits, sigma.images))


def is_code_automorphism(sigma: PermutationLike, c: LinearCode) -> bool:
    """True iff every basis row of ``c`` is mapped into ``c``."""
    if sigma.degree != c.n:
        raise LengthMismatchError(c.n, sigma.degree, "degree")
    return all(c.contains(permute_word(row, sigma.images)) for row in c.rows)


def spin_submodule(h_gens: Sequence[PermutationLike], n: int, seeds: Iterable[BitVector | int]) -> LinearCode:
    """Smallest subspace containing ``seeds`` and invariant under every generator."""
    for g in h_gens:
        if g.degree != n:
            raise LengthMismatchError(n, g.degree, "degree")
    echelon = RowEchelon(n)
    queue: deque[int] = deque()
    for seed in seeds:
        word = seed.bits if isinstance(seed, BitVector) else int(seed)
        if echelon.add(word):
            queue.append(word)
    while queue:
        word = queue.popleft()
        for g in h_gens:
            image = permute_word(word, g.images)
            if echelon.add(image):
                queue.append(image)
    code = code_from_rows(n, echelon.rows)
    # final pass: closure under every generator
    for g in h_gens:
        if not is_code_automorphism(g, code):
            raise AssertionError("spinning terminated on a non-invariant subspace")
    logger.debug("spun submodule of dimension %d in length %d", code.r, n)
    return code
