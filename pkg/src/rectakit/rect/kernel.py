"""The fibre over the base vertex: kernel codes, twists and quotient coverings."""

from __future__ import annotations

import logging
from typing import Optional, Sequence

import numpy as np

from .._core import HypothesesFailError, IntArray, KitConfiguration, NonLinearKernelError, PermutationLike, resolve_limits
from ..gf2code import BitVector, LinearCode, RowEchelon, code_from_rows, is_code_automorphism
from ..gf2code.actions import permute_words
from ..graph import Graph, VertexPartition, hypercube, quotient_by_partition
from .covering import build_covering, covering_from_images
from .models import CodeSummary, CoveringMap, KernelReport, TwistEntry

logger = logging.getLogger(__name__)


def coset_isomorphism(cov: CoveringMap, code: LinearCode) -> Optional[IntArray]:
    """``mapping[s]`` = image of any x with syndrome s, when that is well defined and bijective."""
    words = np.arange(1 << cov.n, dtype=np.uint64)
    syndromes = code.syndromes(words)
    mapping = np.full(1 << code.codimension, -1, dtype=np.int64)
    mapping[syndromes] = cov.image_of
    if not np.array_equal(mapping[syndromes], cov.image_of):
        return None
    if bool((mapping < 0).any()) or np.unique(mapping).shape[0] != mapping.shape[0]:
        return None
    return mapping


def _verify_isomorphism(target: Graph, code: LinearCode, mapping: IntArray, chunk: int) -> bool:
    """Every edge s ~ s + h_i of Γ(C) maps to an edge of the target."""
    h = np.unique(np.array([s for s in code.column_syndromes if s], dtype=np.int64))
    for start in range(0, mapping.shape[0], chunk):
        ss = np.arange(start, min(mapping.shape[0], start + chunk), dtype=np.int64)
        ends = ss[:, None] ^ h[None, :]
        if not bool(target.adjacent(np.repeat(mapping[ss], h.shape[0]), mapping[ends.ravel()]).all()):
            return False
    return True


def _twist(cov: CoveringMap, y: int) -> list[int]:
    """sigma with y + e_{sigma(i)} over the image of e_i, 1-indexed."""
    bits = np.int64(1) << np.arange(cov.n, dtype=np.int64)
    images = cov.image_of[np.int64(y) ^ bits]
    position = {int(u): i for i, u in enumerate(cov.neighbor_order)}
    sigma = [0] * cov.n
    for j, u in enumerate(images):
        sigma[position[int(u)]] = j + 1
    return sigma


def kernel_report(cov: CoveringMap, config: Optional[KitConfiguration] = None) -> KernelReport:
    """Fibre over the base; the kernel code and Γ(C) ≅ target when the fibre is a subspace, twists otherwise."""
    fibre = cov.fibre()
    echelon = RowEchelon(cov.n, (int(y) for y in fibre))
    linear = (1 << echelon.rank) == fibre.shape[0]
    report = KernelReport(n=cov.n, fibre_size=int(fibre.shape[0]), linear=linear, rank=echelon.rank, fibre=[int(y) for y in fibre])
    if linear:
        code = code_from_rows(cov.n, echelon.rows)
        report.code = CodeSummary.of(code)
        mapping = coset_isomorphism(cov, code)
        chunk = max(1, resolve_limits(config).covering_chunk_size // max(cov.n, 1))
        report.isomorphism_verified = mapping is not None and _verify_isomorphism(cov.target, code, mapping, chunk)
        if not report.isomorphism_verified:
            logger.warning("fibre is a subspace but Γ(C) -> %r is not an isomorphism", cov.target)
    else:
        report.twist_data = [TwistEntry(fibre_element=BitVector(cov.n, int(y)).to_string(), sigma=_twist(cov, int(y))) for y in fibre]
    logger.info("kernel of covering Q%d -> %r: fibre %d, linear=%s", cov.n, cov.target, report.fibre_size, linear)
    return report


def reconstruct_code(target: Graph, base: int = 0, config: Optional[KitConfiguration] = None) -> LinearCode:
    """The code C with Γ(C) ≅ target, read off the covering by Q_n."""
    report = kernel_report(build_covering(target, base, config=config), config)
    code = report.to_code()
    if code is None:
        raise NonLinearKernelError(report.fibre_size, report.rank)
    return code


def contains_even_weight_code(code: LinearCode) -> bool:
    """E_n ⊆ C, which needs dimension n - 1 and every e_1 + e_j."""
    if code.r < code.n - 1:
        return False
    return all(code.contains(1 | (1 << j)) for j in range(1, code.n))


def kernel_invariance_check(report: KernelReport, h_gens: Sequence[PermutationLike]) -> bool:
    """The kernel code is H-invariant and does not contain E_n."""
    code = report.to_code()
    if code is None:
        raise HypothesesFailError("the kernel is not linear", {"fibre_size": report.fibre_size})
    return all(is_code_automorphism(g, code) for g in h_gens) and not contains_even_weight_code(code)


def twisted_translation_partition(n: int, sigma: PermutationLike, shift: int) -> VertexPartition:
    """Orbits on Q_n of the cyclic group generated by x -> x^sigma + shift."""
    cube = np.arange(1 << n, dtype=np.int64)
    step = permute_words(cube.astype(np.uint64), sigma.images).astype(np.int64) ^ np.int64(shift)
    block = np.full(1 << n, -1, dtype=np.int64)
    count = 0
    for x in cube:
        if block[x] >= 0:
            continue
        y = int(x)
        while block[y] < 0:
            block[y] = count
            y = int(step[y])
        count += 1
    return VertexPartition(block)


def quotient_covering(n: int, partition: VertexPartition, config: Optional[KitConfiguration] = None) -> CoveringMap:
    """The projection Q_n -> (Q_n)_B, which must be a covering."""
    limit = resolve_limits(config).max_cube_dimension
    if n > limit:
        raise HypothesesFailError(f"cube dimension {n} exceeds {limit}")
    quotient = quotient_by_partition(hypercube(n), partition)
    if not quotient.covering:
        raise HypothesesFailError("the partition does not induce a covering", {"loops": list(quotient.loops)})
    return covering_from_images(quotient.graph, partition.block_of, config)
