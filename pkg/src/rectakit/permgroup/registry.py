"""Verified generator sets for the groups the toolkit works with.

Mathieu and PΓL2(8) generators are read from ``data/*.gens``; their order,
transitivity degree and (for M24, M23) preservation of the Golay code are
re-verified the first time each is loaded.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Callable, Dict, List, Optional

from .._core import RegistryVerificationError
from ..gf2code import LinearCode, golay23, golay24, is_code_automorphism
from .io import parse_generators
from .permutation import Permutation
from .schreier_sims import PermGroup

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RegistryEntry:
    file: str
    degree: int
    order: int
    transitivity: int
    code: Optional[Callable[[], LinearCode]] = None


REGISTRY: Dict[str, RegistryEntry] = {
    "M24": RegistryEntry("m24.gens", 24, 244823040, 5, golay24),
    "M23": RegistryEntry("m23.gens", 23, 10200960, 4, golay23),
    "M12": RegistryEntry("m12.gens", 12, 95040, 5),
    "M11": RegistryEntry("m11.gens", 11, 7920, 4),
    "PGammaL(2,8)": RegistryEntry("pgl_gamma_2_8.gens", 9, 1512, 3),
}


def _exact_transitivity(group: PermGroup, expected: int) -> bool:
    """k-transitive for k = expected but not expected + 1, from one chain."""
    n = group.degree
    depth = min(expected + 1, n)
    sizes = group.fundamental_orbit_sizes(list(range(depth)))
    if sizes[:expected] != [n - i for i in range(expected)]:
        return False
    return depth == expected or sizes[expected] != n - expected


@lru_cache(maxsize=None)
def _load(name: str) -> tuple[tuple[Permutation, ...], PermGroup]:
    entry = REGISTRY[name]
    text = (resources.files("rectakit.permgroup") / "data" / entry.file).read_text()
    gens = parse_generators(text)
    if any(g.degree != entry.degree for g in gens):
        raise RegistryVerificationError(name, f"expected degree {entry.degree}")
    group = PermGroup(entry.degree, gens)
    if group.order() != entry.order:
        raise RegistryVerificationError(name, f"order {group.order()}, expected {entry.order}")
    if not _exact_transitivity(group, entry.transitivity):
        raise RegistryVerificationError(name, f"not exactly {entry.transitivity}-transitive")
    if entry.code is not None:
        code = entry.code()
        for index, g in enumerate(gens):
            if not is_code_automorphism(g, code):
                raise RegistryVerificationError(name, f"generator {index + 1} does not preserve {code!r}")
    logger.info("loaded %s: degree %d, order %d", name, entry.degree, entry.order)
    return tuple(gens), group


def registry_group(name: str) -> PermGroup:
    """The verified group registered under ``name``."""
    if name not in REGISTRY:
        raise KeyError(f"unknown group {name!r}; known: {', '.join(REGISTRY)}")
    return _load(name)[1]


def m24_gens() -> List[Permutation]:
    return list(_load("M24")[0])


def m23_gens() -> List[Permutation]:
    return list(_load("M23")[0])


def m12_gens() -> List[Permutation]:
    return list(_load("M12")[0])


def m11_gens() -> List[Permutation]:
    return list(_load("M11")[0])


def pgl_gamma_2_8_gens() -> List[Permutation]:
    """PΓL2(8) on the projective line: ∞ is point 1, field element k (α^3 = α + 1) is point k + 2."""
    return list(_load("PGammaL(2,8)")[0])


def mathieu_gens(n: int) -> List[Permutation]:
    loaders = {11: m11_gens, 12: m12_gens, 23: m23_gens, 24: m24_gens}
    if n not in loaders:
        raise ValueError(f"no Mathieu group of degree {n}")
    return loaders[n]()


def s_n_gens(n: int) -> List[Permutation]:
    """(1 2) and (1 2 ... n)."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return [Permutation.identity(1)]
    return [Permutation.from_cycles(n, [(1, 2)]), Permutation.from_cycles(n, [tuple(range(1, n + 1))])]


def a_n_gens(n: int) -> List[Permutation]:
    """(1 2 3) with (1 2 ... n) for odd n, or with (2 3 ... n) for even n."""
    if n < 3:
        return [Permutation.identity(max(n, 1))]
    long_cycle = tuple(range(1, n + 1)) if n % 2 else tuple(range(2, n + 1))
    return [Permutation.from_cycles(n, [(1, 2, 3)]), Permutation.from_cycles(n, [long_cycle])]


def a4_on_k4() -> List[Permutation]:
    return a_n_gens(4)


def s4_on_k4() -> List[Permutation]:
    return s_n_gens(4)


def _part_map(perm: tuple[int, ...]) -> Permutation:
    """Permute the four parts of K_{4[2]} (vertex 2p + s), keeping sides."""
    return Permutation([2 * perm[v // 2] + v % 2 for v in range(8)])


def _side_swap(parts: tuple[int, ...]) -> Permutation:
    return Permutation([v ^ 1 if v // 2 in parts else v for v in range(8)])


def k_n_multipartite_groups() -> Dict[str, List[Permutation]]:
    """Generators of S2 wr S4, E:S4 and (E:A4)<tau> on the vertices 2p + s of K_{4[2]}.

    E is the even-weight subgroup of the side swaps and tau swaps the sides of
    part 0 and then exchanges parts 0 and 1.
    """
    transposition = _part_map((1, 0, 2, 3))
    four_cycle = _part_map((1, 2, 3, 0))
    a4 = [_part_map((1, 2, 0, 3)), _part_map((0, 2, 3, 1))]
    even_swaps = [_side_swap((0, 1)), _side_swap((1, 2)), _side_swap((2, 3))]
    tau = _side_swap((0,)) * transposition
    return {
        "S2wrS4": [_side_swap((0,)), transposition, four_cycle],
        "E:S4": even_swaps + [transposition, four_cycle],
        "(E:A4)<tau>": even_swaps + a4 + [tau],
    }
