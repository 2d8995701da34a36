"""Coset spaces GF(2)^n / C with canonical representatives."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .._core import IntArray, KitConfiguration, QuotientTooLargeError, WordArray, resolve_limits
from .bitvector import BitVector, lex_key, popcount
from .codes import LinearCode

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CosetSpace:
    """The cosets of ``code``, indexed by syndrome.

    ``representatives[s]`` is the minimum-weight vector of coset ``s``, ties
    broken by the lexicographically smallest string (coordinate 1 most
    significant).
    """

    code: LinearCode
    representatives: WordArray

    @property
    def size(self) -> int:
        return int(self.representatives.shape[0])

    def syndrome_of(self, v: BitVector | int) -> int:
        return self.code.syndrome(v)

    def representative(self, syndrome: int) -> BitVector:
        return BitVector(self.code.n, int(self.representatives[syndrome]))

    def representative_weights(self) -> IntArray:
        return popcount(self.representatives)

    def covering_radius(self) -> int:
        return int(self.representative_weights().max())


def _next_weight_level(level: WordArray, high: IntArray, n: int) -> tuple[WordArray, IntArray]:
    """All words of weight w+1 from the weight-w words, each produced once by its new top bit."""
    parts = []
    tops = []
    for b in range(n):
        sel = level[high < b]
        if sel.shape[0]:
            parts.append(sel | np.uint64(1 << b))
            tops.append(np.full(sel.shape[0], b, dtype=np.int64))
    if not parts:
        return np.zeros(0, dtype=np.uint64), np.zeros(0, dtype=np.int64)
    return np.concatenate(parts), np.concatenate(tops)


def coset_space(c: LinearCode, config: Optional[KitConfiguration] = None) -> CosetSpace:
    """Enumerate canonical coset representatives by increasing weight.

    Each weight level holds C(n, w) words; a level larger than
    2^max_explicit_quotient_dimension raises QuotientTooLargeError.
    """
    limits = resolve_limits(config)
    limit = limits.max_coset_dimension
    m = c.codimension
    if m > limit:
        raise QuotientTooLargeError(m, limit)
    total = 1 << m
    reps = np.zeros(total, dtype=np.uint64)
    assigned = np.zeros(total, dtype=bool)
    assigned[0] = True
    remaining = total - 1

    level = np.zeros(1, dtype=np.uint64)
    high = np.full(1, -1, dtype=np.int64)
    weight = 0
    while remaining and weight < c.n:
        words = math.comb(c.n, weight + 1)
        if words > 1 << limits.max_explicit_quotient_dimension:
            raise QuotientTooLargeError(m, limits.max_explicit_quotient_dimension, f"weight level {weight + 1} ({words} words)")
        level, high = _next_weight_level(level, high, c.n)
        weight += 1
        order = np.argsort(lex_key(level, c.n), kind="stable")
        ordered = level[order]
        syn = c.syndromes(ordered)
        first_syn, first_idx = np.unique(syn, return_index=True)
        fresh = ~assigned[first_syn]
        reps[first_syn[fresh]] = ordered[first_idx[fresh]]
        assigned[first_syn[fresh]] = True
        remaining -= int(fresh.sum())
        logger.debug("coset weight level %d: %d new representatives, %d remaining", weight, int(fresh.sum()), remaining)
    reps.setflags(write=False)
    return CosetSpace(c, reps)
