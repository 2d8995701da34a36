"""The covering of a rectagraph by the n-cube, built by quadrangle closure.

Cube vertices are filled one weight level at a time. For a vertex x of weight
at least 2 with lowest set bits i < j, the images of x + e_i, x + e_j and
x + e_i + e_j are already known and span a path of length 2 in the target;
since c_2 = 2 there is exactly one other common neighbour, and that is the
image of x. The filled map is then verified as a covering at every vertex.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterator, List, Optional, Sequence

import numpy as np

from .._core import (
    DimensionTooLargeError,
    HypothesesFailError,
    InconsistentCoveringError,
    IntArray,
    KitConfiguration,
    as_int_array,
    resolve_limits,
)
from ..gf2code.bitvector import popcount
from ..graph import CayleyGraph, Graph, distance_profile, is_rectagraph
from .models import CoveringMap

logger = logging.getLogger(__name__)

# Above this many (vertex, pair) checks the quadrangle re-check relies on the local bijection.
_ALL_PAIRS_LIMIT = 1 << 26


def check_hypotheses(target: Graph, base: int) -> int:
    """Valency n of a rectagraph with a_2 = 0 and c_3 = 3 at ``base``; raises otherwise."""
    result = is_rectagraph(target)
    if not result:
        raise HypothesesFailError(f"not a rectagraph ({result.reason})", {"witness": result.witness})
    profile = distance_profile(target, base, max_distance=3)
    if profile.depth >= 2 and profile.a_values[2] != [0]:
        raise HypothesesFailError("a_2 is not 0", {"a_2": profile.a_values[2]})
    if profile.depth >= 3 and profile.c_values[3] != [3]:
        raise HypothesesFailError("c_3 is not 3", {"c_3": profile.c_values[3]})
    return profile.shell_sizes[1] if profile.depth >= 1 else 0


def _chunks(total: int, size: int) -> Iterator[tuple[int, int]]:
    for start in range(0, total, size):
        yield start, min(total, start + size)


def _sweep(fn: Callable[[int, int], None], total: int, size: int, threads: int) -> None:
    """Run ``fn(start, stop)`` over consecutive ranges; the first exception propagates."""
    ranges = list(_chunks(total, size))
    if threads <= 1 or len(ranges) == 1:
        for start, stop in ranges:
            fn(start, stop)
        return
    with ThreadPoolExecutor(max_workers=threads) as pool:
        for future in [pool.submit(fn, start, stop) for start, stop in ranges]:
            future.result()


def _close_quadrangles(target: Graph, pa: IntArray, pb: IntArray, pab: IntArray, xs: IntArray, i: IntArray, j: IntArray) -> IntArray:
    """The common neighbour of pa and pb other than pab, for each entry."""
    if isinstance(target, CayleyGraph):
        return pa ^ pb ^ pab
    owners, cand = target.expand(pa)
    keep = target.adjacent(cand, pb[owners]) & (cand != pab[owners])
    counts = np.bincount(owners[keep], minlength=pa.shape[0])
    bad = np.flatnonzero(counts != 1)
    if bad.shape[0]:
        k = int(bad[0])
        raise InconsistentCoveringError(
            f"{int(counts[k])} candidates close the quadrangle", int(xs[k]), (int(i[k]) + 1, int(j[k]) + 1)
        )
    out = np.empty(pa.shape[0], dtype=np.int64)
    out[owners[keep]] = cand[keep]
    return out


def _fill(target: Graph, n: int, base: int, order: Sequence[int], chunk: int) -> IntArray:
    image = np.full(1 << n, -1, dtype=np.int64)
    image[0] = base
    for i, u in enumerate(order):
        image[1 << i] = u
    if n < 2:
        return image
    cube = np.arange(1 << n, dtype=np.int64)
    weights = popcount(cube)
    by_weight = np.argsort(weights, kind="stable")
    bounds = np.searchsorted(weights[by_weight], np.arange(n + 2))
    for w in range(2, n + 1):
        level = by_weight[bounds[w] : bounds[w + 1]]
        for start, stop in _chunks(level.shape[0], chunk):
            xs = level[start:stop]
            low = xs & -xs
            rest = xs ^ low
            second = rest & -rest
            i = np.log2(low).astype(np.int64)
            j = np.log2(second).astype(np.int64)
            image[xs] = _close_quadrangles(target, image[xs ^ low], image[xs ^ second], image[xs ^ low ^ second], xs, i, j)
        logger.debug("covering: filled weight level %d (%d vertices)", w, level.shape[0])
    return image


def verify_covering(target: Graph, n: int, image: IntArray, config: Optional[KitConfiguration] = None) -> None:
    """Local bijection at every cube vertex, edges checked once each, plus non-degenerate quadrangles."""
    limits = resolve_limits(config)
    threads = config.threads if config is not None else 1
    size = max(1, limits.covering_chunk_size // max(n, 1))
    bits = np.int64(1) << np.arange(n, dtype=np.int64)

    def local(start: int, stop: int) -> None:
        xs = np.arange(start, stop, dtype=np.int64)
        nbr = xs[:, None] ^ bits[None, :]
        images = image[nbr]
        up = (xs[:, None] & bits[None, :]) == 0
        rows, cols = np.nonzero(up)
        ok = target.adjacent(image[xs[rows]], images[rows, cols])
        if not bool(ok.all()):
            k = int(np.flatnonzero(~ok)[0])
            raise InconsistentCoveringError("a cube edge is not mapped to an edge", int(xs[rows[k]]), (int(cols[k]) + 1,))
        ordered = np.sort(images, axis=1)
        clash = (ordered[:, 1:] == ordered[:, :-1]).any(axis=1) if n > 1 else np.zeros(xs.shape[0], dtype=bool)
        if bool(clash.any()):
            raise InconsistentCoveringError("two cube neighbours share an image", int(xs[int(np.flatnonzero(clash)[0])]))

    _sweep(local, 1 << n, size, threads)

    if n >= 2 and (1 << n) * math.comb(n, 2) <= _ALL_PAIRS_LIMIT:
        ii, jj = np.triu_indices(n, k=1)
        pairs = bits[ii] | bits[jj]

        def quadrangles(start: int, stop: int) -> None:
            xs = np.arange(start, stop, dtype=np.int64)
            collapsed = image[xs[:, None] ^ pairs[None, :]] == image[xs][:, None]
            if bool(collapsed.any()):
                r, c = np.argwhere(collapsed)[0]
                raise InconsistentCoveringError("a quadrangle collapses", int(xs[r]), (int(ii[c]) + 1, int(jj[c]) + 1))

        _sweep(quadrangles, 1 << n, max(1, limits.covering_chunk_size // pairs.shape[0]), threads)

    reached = np.bincount(image, minlength=target.order)
    if bool((reached == 0).any()):
        raise InconsistentCoveringError("the map is not onto the target", 0)
    if reached.min() != reached.max():
        raise InconsistentCoveringError("fibres have different sizes", int(np.flatnonzero(image == int(np.argmin(reached)))[0]))


def build_covering(
    target: Graph,
    base: int = 0,
    neighbor_order: Optional[Sequence[int]] = None,
    config: Optional[KitConfiguration] = None,
) -> CoveringMap:
    """The unique covering Q_n -> target with 0 -> base and e_i -> neighbor_order[i]."""
    n = check_hypotheses(target, base)
    limit = resolve_limits(config).max_cube_dimension
    if n > limit:
        raise DimensionTooLargeError(n, limit)
    nbrs = target.neighbors(base)
    order: List[int] = [int(v) for v in (nbrs if neighbor_order is None else neighbor_order)]
    if sorted(order) != [int(v) for v in nbrs]:
        raise HypothesesFailError("neighbor_order must list every neighbour of the base exactly once", {"base": base})
    chunk = max(1, resolve_limits(config).covering_chunk_size // max(n, 1))
    image = _fill(target, n, base, order, chunk)
    verify_covering(target, n, image, config)
    image.setflags(write=False)
    logger.info("covering Q%d -> %r: fibre size %d", n, target, (1 << n) // target.order)
    return CoveringMap(n=n, target=target, image_of=image, base=int(base), neighbor_order=tuple(order))


def covering_from_images(target: Graph, images: Sequence[int] | IntArray, config: Optional[KitConfiguration] = None) -> CoveringMap:
    """Wrap and verify a map given by the image of every cube vertex."""
    image = as_int_array(images).copy()
    n = int(image.shape[0]).bit_length() - 1
    if image.shape[0] != 1 << n:
        raise ValueError("the image array must have length 2^n")
    verify_covering(target, n, image, config)
    image.setflags(write=False)
    return CoveringMap(n=n, target=target, image_of=image, base=int(image[0]), neighbor_order=tuple(int(image[1 << i]) for i in range(n)))
