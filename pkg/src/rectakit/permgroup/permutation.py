"""Permutations of {0, ..., degree-1} stored as image arrays.

Points are 0-indexed internally and 1-indexed in every text format.
Products follow the right-action convention used throughout the package:
``g * h`` applies ``g`` first, then ``h``, so ``(g * h).images == h.images[g.images]``.
"""

from __future__ import annotations

import math
from typing import Iterable, List, Sequence

import numpy as np

from .._core import IntArray, LengthMismatchError, as_int_array


class Permutation:
    """An immutable permutation of ``range(degree)``."""

    __slots__ = ("_images", "_key")

    def __init__(self, images: Sequence[int] | IntArray) -> None:
        arr = as_int_array(images)
        if arr.ndim != 1:
            raise ValueError("permutation images must be one-dimensional")
        n = arr.shape[0]
        if n and (arr.min() < 0 or arr.max() >= n or np.unique(arr).shape[0] != n):
            raise ValueError("images do not form a permutation")
        arr.setflags(write=False)
        self._images = arr
        self._key = arr.tobytes()

    @classmethod
    def _trusted(cls, images: IntArray) -> Permutation:
        """Wrap an array already known to be a permutation."""
        perm = cls.__new__(cls)
        images.setflags(write=False)
        perm._images = images
        perm._key = images.tobytes()
        return perm

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(np.arange(degree, dtype=np.int64))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        """Build a permutation from 1-indexed cycles, e.g. ``[(1, 2, 3), (4, 5)]``."""
        images = np.arange(degree, dtype=np.int64)
        for cycle in cycles:
            points = [p - 1 for p in cycle]
            for a, b in zip(points, points[1:] + points[:1]):
                images[a] = b
        return cls(images)

    @classmethod
    def from_one_indexed(cls, images: Sequence[int]) -> Permutation:
        return cls([i - 1 for i in images])

    @property
    def degree(self) -> int:
        return int(self._images.shape[0])

    @property
    def images(self) -> IntArray:
        return self._images

    def __call__(self, point: int) -> int:
        return int(self._images[point])

    def apply(self, points: IntArray) -> IntArray:
        """Images of an array of points."""
        return self._images[points]

    def __mul__(self, other: Permutation) -> Permutation:
        if other.degree != self.degree:
            raise LengthMismatchError(self.degree, other.degree, "degree")
        return Permutation._trusted(other._images[self._images])

    def __pow__(self, exponent: int) -> Permutation:
        base = self if exponent >= 0 else self.inverse()
        result = Permutation.identity(self.degree)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def inverse(self) -> Permutation:
        inv = np.empty_like(self._images)
        inv[self._images] = np.arange(self.degree, dtype=np.int64)
        return Permutation._trusted(inv)

    def is_identity(self) -> bool:
        return bool(np.array_equal(self._images, np.arange(self.degree)))

    def support(self) -> IntArray:
        return np.flatnonzero(self._images != np.arange(self.degree))

    def cycles(self) -> List[tuple[int, ...]]:
        """Nontrivial cycles, 1-indexed, each starting at its smallest point."""
        seen = np.zeros(self.degree, dtype=bool)
        result = []
        for start in range(self.degree):
            if seen[start] or self._images[start] == start:
                continue
            cycle = [start]
            seen[start] = True
            nxt = int(self._images[start])
            while nxt != start:
                cycle.append(nxt)
                seen[nxt] = True
                nxt = int(self._images[nxt])
            result.append(tuple(p + 1 for p in cycle))
        return result

    def order(self) -> int:
        return math.lcm(1, *(len(c) for c in self.cycles()))

    def restrict(self, points: IntArray) -> Permutation:
        """Action on ``points`` (which must be an invariant set), reindexed by position."""
        points = as_int_array(points)
        position = {int(p): i for i, p in enumerate(points)}
        return Permutation([position[int(q)] for q in self._images[points]])

    def to_one_indexed(self) -> List[int]:
        return [int(i) + 1 for i in self._images]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        body = "".join("(" + ",".join(str(p) for p in c) + ")" for c in self.cycles()) or "()"
        return f"Permutation<{self.degree}>{body}"
