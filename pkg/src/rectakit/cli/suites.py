"""The reproduction battery run by ``rectakit reproduce``.

Each suite is an ordered list of named cases. A case builds its own inputs and
returns a :class:`CheckResult`; cases are independent, so a suite may run them
on a thread pool, and results are always reported in suite order.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
import logging
import math
import time
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .._core import CheckResult, IntArray, KitConfiguration
from ..gf2code import (
    BitVector,
    LinearCode,
    golay23,
    golay23_even,
    golay24,
    min_distance,
    parameters,
    repetition_code,
    weight_distribution,
    zero_code,
)
from ..graph import (
    Graph,
    bipartite_double,
    complement,
    complete,
    complete_multipartite,
    component_graph,
    coset_graph,
    diameter,
    distance_k_graph,
    distance_profile,
    girth,
    halved_cube_complement_without_antipodes,
    halved_graphs,
    hypercube,
    is_locally,
    is_rectagraph,
    isomorphic,
    brute_force_automorphisms,
    sp6_minus_elliptic_quadric,
    sp6_minus_hyperbolic_quadric,
    sp6_minus_hyperplane,
    triangular,
)
from ..permgroup import (
    PermGroup,
    Permutation,
    a4_on_k4,
    a_n_gens,
    affine_action,
    is_k_homogeneous,
    is_k_transitive,
    k_n_multipartite_groups,
    mathieu_gens,
    natural_action,
    pair_action,
    pgl_gamma_2_8_gens,
    rank_on,
    registry_group,
    s4_on_k4,
    s_n_gens,
)
from ..rect import (
    GroupLike,
    build_covering,
    coset_graph_automorphism_check,
    five_transitive_local_check,
    four_homogeneous_local_check,
    kernel_invariance_check,
    kernel_report,
    locally_rank3_check,
    natural_local_action_check,
    quotient_covering,
    rectagraph_over,
    twisted_translation_partition,
    two_arc_orbit_check,
)
from .reports import errored, passed

logger = logging.getLogger(__name__)

SUITE_NAMES = ("main-rect", "table-1", "rank-3-groups", "corollaries", "sp6", "all")


@dataclass(frozen=True)
class SuiteCase:
    name: str
    run: Callable[[KitConfiguration], CheckResult]


def _guarded(case: SuiteCase, config: KitConfiguration) -> Tuple[CheckResult, float]:
    start = time.perf_counter()
    try:
        result = case.run(config)
    except Exception as e:  # a failing case must not abort the battery
        logger.warning("case %s raised %s", case.name, e)
        result = errored(case.name, e)
    elapsed = time.perf_counter() - start
    logger.info("%s: %s (%.2fs)", case.name, result.status, elapsed)
    return result, elapsed


def run_cases(cases: Sequence[SuiteCase], config: KitConfiguration) -> List[Tuple[CheckResult, float]]:
    """Results in case order, whatever the number of threads."""
    if config.threads <= 1:
        return [_guarded(case, config) for case in cases]
    with ThreadPoolExecutor(max_workers=config.threads) as pool:
        return list(pool.map(lambda case: _guarded(case, config), cases))


# ---------------------------------------------------------------------------
# shared helpers


def is_verified_isomorphism(g: Graph, h: Graph, mapping: Optional[IntArray]) -> bool:
    """``mapping`` is a bijection V(g) -> V(h) carrying edges onto edges."""
    if mapping is None or mapping.shape[0] != g.order or g.order != h.order:
        return False
    if np.unique(mapping).shape[0] != g.order:
        return False
    edges = g.to_explicit().edges()
    if edges.shape[0] != h.to_explicit().edges().shape[0]:
        return False
    return bool(h.adjacent(mapping[edges[:, 0]], mapping[edges[:, 1]]).all())


def round_trip(code: LinearCode, config: Optional[KitConfiguration] = None) -> Tuple[bool, Dict[str, object]]:
    """Recover ``code`` from its coset graph with e_i sent to the coset of e_i."""
    gamma = coset_graph(code, config)
    cov = build_covering(gamma, 0, neighbor_order=list(code.column_syndromes), config=config)
    report = kernel_report(cov, config)
    recovered = report.to_code()
    details: Dict[str, object] = {"n": code.n, "fibre_size": report.fibre_size, "linear": report.linear}
    if recovered is not None:
        details["dimension"] = recovered.r
    return recovered == code and bool(report.isomorphism_verified), details


# ---------------------------------------------------------------------------
# main-rect: the five rectagraphs with 4-homogeneous local actions


def _main_rect_case(name: str, code: Callable[[], LinearCode], gens: Callable[[], List[Permutation]]) -> SuiteCase:
    def run(config: KitConfiguration) -> CheckResult:
        c = code()
        action = affine_action(c, gens())
        gamma = action.graph(config)
        homogeneous = four_homogeneous_local_check(gamma, 0, action, config)
        recovered, details = round_trip(c, config)
        return passed(name, homogeneous and recovered, four_homogeneous=homogeneous, round_trip=recovered, **details)

    return SuiteCase(name, run)


def _golay_parameters(config: KitConfiguration) -> CheckResult:
    found = {
        "golay24": list(parameters(golay24(), config)),
        "golay23": list(parameters(golay23(), config)),
        "golay23-even": list(parameters(golay23_even(), config)),
    }
    expected = {"golay24": [24, 12, 8], "golay23": [23, 12, 7], "golay23-even": [23, 11, 8]}
    return passed("golay parameters", found == expected, **found)


def _golay24_weights(config: KitConfiguration) -> CheckResult:
    dist = [int(v) for v in weight_distribution(golay24(), config)]
    symmetric = dist == dist[::-1]
    ok = dist[8] == 759 and symmetric and min(w for w in range(1, 25) if dist[w]) == min_distance(golay24(), config)
    return passed("golay24 weight distribution", ok, weight_8=dist[8], symmetric=symmetric, distribution=dist)


def _coset_rectagraphs(config: KitConfiguration) -> CheckResult:
    found: Dict[str, object] = {}
    ok = True
    for name, make in (("golay24", golay24), ("golay23", golay23), ("golay23-even", golay23_even)):
        gamma = coset_graph(make(), config)
        profile = distance_profile(gamma, 0, max_distance=3)
        holds = bool(is_rectagraph(gamma)) and profile.a_values[2] == [0] and profile.c_values[3] == [3]
        found[name] = holds
        ok = ok and holds
    return passed("coset graphs are rectagraphs with a2=0, c3=3", ok, **found)


def _double_golay23(config: KitConfiguration) -> CheckResult:
    """The bipartite double of Γ(C23) recovers an even [23,11,8] code."""
    double = bipartite_double(coset_graph(golay23(), config))
    report = kernel_report(build_covering(double, 0, config=config), config)
    code = report.to_code()
    found = list(parameters(code, config)) if code is not None else None
    return passed("double of Gamma(C23) recovers a [23,11,8] code", found == [23, 11, 8], parameters=found)


def main_rect_cases() -> List[SuiteCase]:
    return [
        SuiteCase("golay parameters", _golay_parameters),
        SuiteCase("golay24 weight distribution", _golay24_weights),
        SuiteCase("coset graphs are rectagraphs with a2=0, c3=3", _coset_rectagraphs),
        _main_rect_case("Q7 with 2^7:S7", lambda: zero_code(7), lambda: s_n_gens(7)),
        _main_rect_case("Box7 with 2^6:S7", lambda: repetition_code(7), lambda: s_n_gens(7)),
        _main_rect_case("Gamma(C23).2 with 2^12:M23", golay23_even, lambda: mathieu_gens(23)),
        SuiteCase("double of Gamma(C23) recovers a [23,11,8] code", _double_golay23),
        _main_rect_case("Gamma(C23) with 2^11:M23", golay23, lambda: mathieu_gens(23)),
        _main_rect_case("Gamma(C24) with 2^12:M24", golay24, lambda: mathieu_gens(24)),
    ]


# ---------------------------------------------------------------------------
# table-1: locally rank 3 pairs (graph, group)


def _table_case(name: str, build: Callable[[KitConfiguration], Tuple[Graph, GroupLike]], accept: bool) -> SuiteCase:
    def run(config: KitConfiguration) -> CheckResult:
        graph, group = build(config)
        certificate = locally_rank3_check(graph, group, config)
        details: Dict[str, object] = {"expected": "accept" if accept else "reject", "accepted": certificate.accepted, "valency": certificate.n}
        agrees = True
        if certificate.girth == 3 and graph.valency != graph.order - 1:
            two_arcs = two_arc_orbit_check(graph, group, config)
            details["two_arc_orbits"] = two_arcs
            agrees = two_arcs == certificate.accepted
        if certificate.reason:
            details["reason"] = certificate.reason
        return passed(name, certificate.accepted == accept and agrees, **details)

    return SuiteCase(name, run)


def _halved_affine(code: Callable[[], LinearCode], gens: Callable[[], List[Permutation]]) -> Callable[[KitConfiguration], Tuple[Graph, GroupLike]]:
    def build(config: KitConfiguration) -> Tuple[Graph, GroupLike]:
        action = affine_action(code(), gens(), restrict_even=True)
        return action.graph(config), action

    return build


def _on_vertices(graph: Callable[[], Graph], gens: Callable[[], List[Permutation]]) -> Callable[[KitConfiguration], Tuple[Graph, GroupLike]]:
    def build(config: KitConfiguration) -> Tuple[Graph, GroupLike]:
        g = graph()
        return g, PermGroup(g.order, gens())

    return build


def table_one_cases() -> List[SuiteCase]:
    cases = []
    for n in range(5, 13):
        cases.append(_table_case(f"halfQ{n} with 2^{n - 1}:S{n}", _halved_affine(lambda n=n: zero_code(n), lambda n=n: s_n_gens(n)), True))
        cases.append(_table_case(f"halfQ{n} with 2^{n - 1}:A{n}", _halved_affine(lambda n=n: zero_code(n), lambda n=n: a_n_gens(n)), True))
    for label, gens in k_n_multipartite_groups().items():
        cases.append(_table_case(f"K4[2] with {label}", _on_vertices(lambda: complete_multipartite(4, 2), lambda gens=gens: gens), True))
    cases.append(_table_case("K4 with A4", _on_vertices(lambda: complete(4), a4_on_k4), True))
    cases.append(_table_case("K4 with S4", _on_vertices(lambda: complete(4), s4_on_k4), False))
    cases.append(_table_case("halfQ9 with 2^8:PGammaL(2,8)", _halved_affine(lambda: zero_code(9), pgl_gamma_2_8_gens), True))
    for n in (8, 10, 12):
        cases.append(_table_case(f"halfBox{n} with 2^{n - 2}:S{n}", _halved_affine(lambda n=n: repetition_code(n), lambda n=n: s_n_gens(n)), True))
    cases.append(_table_case("halfBox12 with 2^10:M12", _halved_affine(lambda: repetition_code(12), lambda: mathieu_gens(12)), True))
    cases.append(_table_case("halfGamma(C23).2 with 2^11:M23", _halved_affine(golay23_even, lambda: mathieu_gens(23)), True))
    cases.append(_table_case("halfGamma(C24) with 2^11:M24", _halved_affine(golay24, lambda: mathieu_gens(24)), True))
    for n in (11, 12, 23, 24):
        cases.append(_table_case(f"halfQ{n} with 2^{n - 1}:M{n}", _halved_affine(lambda n=n: zero_code(n), lambda n=n: mathieu_gens(n)), True))
    return cases


# ---------------------------------------------------------------------------
# rank-3-groups: groups of rank 3 on unordered pairs


def _pair_rank(name: str, group: Callable[[], PermGroup]) -> SuiteCase:
    def run(config: KitConfiguration) -> CheckResult:
        g = group()
        r = rank_on(g, pair_action(g.degree), config)
        return passed(name, r == 3, rank=r, degree=g.degree)

    return SuiteCase(name, run)


def _natural_ranks(config: KitConfiguration) -> CheckResult:
    ranks = {f"S{n}": rank_on(PermGroup(n, s_n_gens(n)), natural_action(n), config) for n in range(5, 13)}
    return passed("S_n natural action has rank 2", set(ranks.values()) == {2}, **ranks)


def _mathieu_transitivity(config: KitConfiguration) -> CheckResult:
    m23, m24 = registry_group("M23"), registry_group("M24")
    found = {
        "M23_4_homogeneous": is_k_homogeneous(m23, 4),
        "M23_5_transitive": is_k_transitive(m23, 5),
        "M24_5_transitive": is_k_transitive(m24, 5),
    }
    return passed("Mathieu transitivity", found == {"M23_4_homogeneous": True, "M23_5_transitive": False, "M24_5_transitive": True}, **found)


def rank_three_cases() -> List[SuiteCase]:
    cases = []
    for n in range(5, 13):
        cases.append(_pair_rank(f"S{n} on pairs", lambda n=n: PermGroup(n, s_n_gens(n))))
        cases.append(_pair_rank(f"A{n} on pairs", lambda n=n: PermGroup(n, a_n_gens(n))))
    for name in ("PGammaL(2,8)", "M11", "M12", "M23", "M24"):
        cases.append(_pair_rank(f"{name} on pairs", lambda name=name: registry_group(name)))
    cases.append(SuiteCase("S_n natural action has rank 2", _natural_ranks))
    cases.append(SuiteCase("Mathieu transitivity", _mathieu_transitivity))
    return cases


# ---------------------------------------------------------------------------
# corollaries: natural and 5-transitive local actions, kernels, locally triangular graphs


def _local_case(name: str, check: Callable[..., bool], code: Callable[[], LinearCode], gens: Callable[[], List[Permutation]], expected: bool) -> SuiteCase:
    def run(config: KitConfiguration) -> CheckResult:
        action = affine_action(code(), gens())
        found = check(action.graph(config), 0, action, config)
        return passed(name, found == expected, result=found, expected=expected)

    return SuiteCase(name, run)


def _code_automorphisms(config: KitConfiguration) -> CheckResult:
    found = coset_graph_automorphism_check(golay24(), mathieu_gens(24), config)
    return passed("2^12:M24 acts on Gamma(C24)", found)


def _kernel_invariance(config: KitConfiguration) -> CheckResult:
    code = repetition_code(9)
    gamma = coset_graph(code, config)
    cov = build_covering(gamma, 0, neighbor_order=list(code.column_syndromes), config=config)
    report = kernel_report(cov, config)
    invariant = kernel_invariance_check(report, s_n_gens(9))
    return passed("kernel of Box9 is S9-invariant and avoids E9", invariant and report.to_code() == code, fibre_size=report.fibre_size)


def _twisted_kernel(config: KitConfiguration) -> CheckResult:
    """x -> x^sigma + y with sigma = (1 2 3 4)(5 6 7 8) and y = e1 + e5 + e9 on Q9."""
    sigma = Permutation.from_cycles(9, [(1, 2, 3, 4), (5, 6, 7, 8)])
    shift = BitVector.from_support(9, [1, 5, 9]).bits
    cov = quotient_covering(9, twisted_translation_partition(9, sigma, shift), config)
    report = kernel_report(cov, config)
    twist = next((entry.sigma for entry in report.twist_data if entry.fibre_element == BitVector(9, shift).to_string()), None)
    ok = report.fibre_size == 8 and not report.linear and twist == sigma.to_one_indexed()
    return passed("twisted translation on Q9 has a non-linear kernel", ok, fibre_size=report.fibre_size, linear=report.linear, rank=report.rank)


def _triangular_case(name: str, code: Callable[[], LinearCode]) -> SuiteCase:
    def run(config: KitConfiguration) -> CheckResult:
        gamma = coset_graph(code(), config)
        pi = rectagraph_over(halved_graphs(gamma)[0], config)
        mapping = isomorphic(pi, gamma, config)
        return passed(name, is_verified_isomorphism(pi, gamma, mapping), vertices=pi.order)

    return SuiteCase(name, run)


def corollary_cases() -> List[SuiteCase]:
    cases = [
        _local_case("Q7: natural local action", natural_local_action_check, lambda: zero_code(7), lambda: s_n_gens(7), True),
        _local_case("Box7: natural local action", natural_local_action_check, lambda: repetition_code(7), lambda: s_n_gens(7), True),
        _local_case("Gamma(C23): local action is not natural", natural_local_action_check, golay23, lambda: mathieu_gens(23), False),
        _local_case("Gamma(C24): 5-transitive local action", five_transitive_local_check, golay24, lambda: mathieu_gens(24), True),
        _local_case("Gamma(C23): local action is not 5-transitive", five_transitive_local_check, golay23, lambda: mathieu_gens(23), False),
        SuiteCase("2^12:M24 acts on Gamma(C24)", _code_automorphisms),
        SuiteCase("kernel of Box9 is S9-invariant and avoids E9", _kernel_invariance),
        SuiteCase("twisted translation on Q9 has a non-linear kernel", _twisted_kernel),
    ]
    for n in range(5, 11):
        cases.append(_triangular_case(f"rectagraph over halfQ{n} is Q{n}", lambda n=n: zero_code(n)))
    for n in (8, 10, 12):
        cases.append(_triangular_case(f"rectagraph over halfBox{n} is Box{n}", lambda n=n: repetition_code(n)))
    cases.append(_triangular_case("rectagraph over halfGamma(C23-even) is Gamma(C23-even)", golay23_even))
    cases.append(_triangular_case("rectagraph over halfGamma(C24) is Gamma(C24)", golay24))
    return cases


# ---------------------------------------------------------------------------
# sp6: the two exceptional Sp6(2) subgraphs


def _elliptic(config: KitConfiguration) -> CheckResult:
    g = sp6_minus_elliptic_quadric()
    shells = distance_profile(g, 0).shell_sizes
    d = diameter(g)
    local = is_locally(g, complement(triangular(6)))
    return passed("Sp6(2) minus elliptic quadric", g.order == 36 and d == 2 and local, vertices=g.order, diameter=d, shells=shells, locally_co_t6=local)


def _hyperplane(config: KitConfiguration) -> CheckResult:
    g = sp6_minus_hyperplane()
    shells = distance_profile(g, 0).shell_sizes
    d = diameter(g)
    local = is_locally(g, complement(triangular(6)))
    return passed("Sp6(2) minus hyperplane", g.order == 32 and d == 3 and local, vertices=g.order, diameter=d, shells=shells, locally_co_t6=local)


def _hyperplane_in_cube(config: KitConfiguration) -> CheckResult:
    g = sp6_minus_hyperplane()
    far = component_graph(distance_k_graph(hypercube(6), 4))
    mapping = isomorphic(g, far, config)
    return passed("Sp6(2) minus hyperplane is a component of the distance-4 graph of Q6", is_verified_isomorphism(g, far, mapping))


def _hyperplane_second_model(config: KitConfiguration) -> CheckResult:
    g = sp6_minus_hyperplane()
    h = halved_cube_complement_without_antipodes(6)
    mapping = isomorphic(g, h, config)
    return passed("Sp6(2) minus hyperplane from the halved 6-cube", is_verified_isomorphism(g, h, mapping))


def _hyperbolic(config: KitConfiguration) -> CheckResult:
    g = sp6_minus_hyperbolic_quadric()
    co_t8 = complement(triangular(8))
    mapping = isomorphic(g, co_t8, config)
    local = is_locally(co_t8, complement(triangular(6)))
    return passed("Sp6(2) minus hyperbolic quadric is the complement of T8", is_verified_isomorphism(g, co_t8, mapping) and local, locally_co_t6=local)


def _multipartite_automorphisms(config: KitConfiguration) -> CheckResult:
    order = brute_force_automorphisms(complete_multipartite(4, 2), config).order()
    return passed("|Aut(K4[2])| = 384", order == 384, order=order)


def _cube_diagram(config: KitConfiguration) -> CheckResult:
    shells = distance_profile(hypercube(4), 0).shell_sizes
    return passed("distance diagram of Q4", shells == [math.comb(4, i) for i in range(5)], shells=shells, girth=girth(hypercube(4)))


def sp6_cases() -> List[SuiteCase]:
    return [
        SuiteCase("Sp6(2) minus elliptic quadric", _elliptic),
        SuiteCase("Sp6(2) minus hyperplane", _hyperplane),
        SuiteCase("Sp6(2) minus hyperplane is a component of the distance-4 graph of Q6", _hyperplane_in_cube),
        SuiteCase("Sp6(2) minus hyperplane from the halved 6-cube", _hyperplane_second_model),
        SuiteCase("Sp6(2) minus hyperbolic quadric is the complement of T8", _hyperbolic),
        SuiteCase("|Aut(K4[2])| = 384", _multipartite_automorphisms),
        SuiteCase("distance diagram of Q4", _cube_diagram),
    ]


SUITES: Dict[str, Callable[[], List[SuiteCase]]] = {
    "main-rect": main_rect_cases,
    "table-1": table_one_cases,
    "rank-3-groups": rank_three_cases,
    "corollaries": corollary_cases,
    "sp6": sp6_cases,
}


def suite_cases(name: str) -> List[SuiteCase]:
    if name == "all":
        return [case for make in SUITES.values() for case in make()]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(SUITE_NAMES)}")
    return SUITES[name]()
