"""Named property checks run by the verify command."""

import logging
from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from stable_tau.algebra import Algebra, corner_algebra
from stable_tau.config import CLASS_TILTING
from stable_tau.group_action import (
    GroupAction,
    is_g_stable_complex,
    is_g_stable_pair,
    is_g_stable_torsion,
    twist_pair,
)
from stable_tau.modules import (
    ModuleMap,
    Representation,
    direct_sum,
    fac_contains,
    hom_dimension,
    is_isomorphic,
    kernel,
    module_label,
    projective,
    projective_cover,
)
from stable_tau.mutation import ExchangeArrow, ExchangeQuiver, brute_force_pairs, distinct_summands, enumerate_pairs
from stable_tau.silting import h0, is_presilting, pair_to_silting
from stable_tau.skew import (
    BijectionReport,
    CharacterGroup,
    SkewAlgebra,
    induce,
    induce_map,
    induced_pair,
    morita_restrict,
    restrict,
    verify_induction_stability,
    verify_restriction_intertwiners,
)
from stable_tau.tau import SttPair, check_via_approximation, is_tau_rigid_pair, tau


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _run(name: str, items: Iterable, predicate: Callable[..., bool], describe: Callable[..., str]) -> CheckResult:
    """Apply ``predicate`` to every item and report the first failure."""
    count = 0
    for item in items:
        count += 1
        if not predicate(item):
            detail = describe(item)
            logging.warning("Check %s failed on %s", name, detail)
            return CheckResult(name, False, detail)
    return CheckResult(name, True, f"{count} cases")


def _pair_label(entry: Tuple[int, SttPair]) -> str:
    return entry[1].label()


def _module_label(module: Representation) -> str:
    return module_label(module)


# Exchange quiver over the base algebra


def check_tau_twist(action: GroupAction, modules: Sequence[Representation]) -> CheckResult:
    """tau of a twist is the twist of tau."""
    cases = [(module, s) for module in modules for s in action.generators]
    return _run(
        "tau commutes with twisting",
        cases,
        lambda case: is_isomorphic(tau(action.twist(case[0], case[1])), action.twist(tau(case[0]), case[1])),
        lambda case: f"{module_label(case[0])} twisted by {action.group.label(case[1])}",
    )


def check_sincere_p_part(quiver: ExchangeQuiver) -> CheckResult:
    return _run(
        "sincere iff empty P-part",
        enumerate(quiver.vertices),
        lambda entry: quiver.annotations[entry[0]].sincere == (not entry[1].p_parts),
        _pair_label,
    )


def check_faithful_tilting(quiver: ExchangeQuiver) -> CheckResult:
    return _run(
        "faithful iff tilting",
        enumerate(quiver.vertices),
        lambda entry: quiver.annotations[entry[0]].faithful == (quiver.annotations[entry[0]].classification == CLASS_TILTING),
        _pair_label,
    )


def check_p_part_uniqueness(quiver: ExchangeQuiver) -> CheckResult:
    """The P-part is the set of vertices where T vanishes."""
    return _run(
        "P-part determined by T",
        enumerate(quiver.vertices),
        lambda entry: set(entry[1].p_parts) == {i for i, count in enumerate(entry[1].t_module.dim_vector) if count == 0},
        _pair_label,
    )


def check_approximation(quiver: ExchangeQuiver) -> CheckResult:
    return _run("regular module approximation", enumerate(quiver.vertices), lambda entry: check_via_approximation(entry[1]), _pair_label)


def check_silting_roundtrip(quiver: ExchangeQuiver) -> CheckResult:
    def roundtrip(entry: Tuple[int, SttPair]) -> bool:
        pair = entry[1]
        complex_ = pair_to_silting(pair)
        return is_presilting(complex_) and is_isomorphic(h0(complex_), pair.t_module)

    return _run("silting complex roundtrip", enumerate(quiver.vertices), roundtrip, _pair_label)


def check_torsion_stability(quiver: ExchangeQuiver, action: GroupAction) -> CheckResult:
    summands = distinct_summands(quiver)
    return _run(
        "pair stability iff torsion class stability",
        enumerate(quiver.vertices),
        lambda entry: is_g_stable_pair(entry[1], action) == is_g_stable_torsion(entry[1].t_module, action, summands),
        _pair_label,
    )


def check_complex_stability(quiver: ExchangeQuiver, action: GroupAction) -> CheckResult:
    return _run(
        "pair stability iff complex stability",
        enumerate(quiver.vertices),
        lambda entry: is_g_stable_pair(entry[1], action) == is_g_stable_complex(pair_to_silting(entry[1]), action),
        _pair_label,
    )


def check_pair_transport(quiver: ExchangeQuiver, action: GroupAction) -> CheckResult:
    """Twisting permutes the vertices, fixing exactly the stable ones."""

    def transported(entry: Tuple[int, SttPair]) -> bool:
        position, pair = entry
        fixed = True
        for s in action.generators:
            target = quiver.find(twist_pair(pair, action, s))
            if target is None:
                return False
            fixed = fixed and target == position
        return fixed == is_g_stable_pair(pair, action)

    return _run("twisting permutes pairs", enumerate(quiver.vertices), transported, _pair_label)


def check_orientation(quiver: ExchangeQuiver) -> CheckResult:
    name = "unique source and sink"
    graph = quiver.to_networkx()
    sources = [vertex for vertex, degree in graph.in_degree if degree == 0]
    sinks = [vertex for vertex, degree in graph.out_degree if degree == 0]
    if sources != [0]:
        return CheckResult(name, False, f"sources {sources}")
    if len(sinks) != 1 or quiver.vertices[sinks[0]].t_parts:
        return CheckResult(name, False, f"sinks {sinks}")
    if not nx.is_directed_acyclic_graph(graph):
        return CheckResult(name, False, "the exchange quiver has a cycle")
    return CheckResult(name, True, f"source {quiver.vertices[0].label()}, sink {quiver.vertices[sinks[0]].label()}")


def check_fac_ordering(quiver: ExchangeQuiver) -> CheckResult:
    """Along every arrow T -> U, Fac U is strictly contained in Fac T."""

    def descends(arrow: ExchangeArrow) -> bool:
        upper, lower = quiver.vertices[arrow.source], quiver.vertices[arrow.target]
        if not all(fac_contains(upper.t_module, part) for part in lower.t_parts):
            return False
        return any(not fac_contains(lower.t_module, part) for part in upper.t_parts)

    return _run(
        "arrows shrink the torsion class",
        quiver.arrows,
        descends,
        lambda arrow: f"{quiver.vertices[arrow.source].label()} -> {quiver.vertices[arrow.target].label()}",
    )


def check_quiver_shape(quiver: ExchangeQuiver) -> CheckResult:
    """Every vertex has exactly one neighbour per summand."""
    graph = quiver.to_networkx().to_undirected()
    n = quiver.algebra.vertex_count
    return _run(
        "every vertex has n neighbours",
        enumerate(quiver.vertices),
        lambda entry: graph.degree[entry[0]] == n,
        _pair_label,
    )


def check_brute_force(quiver: ExchangeQuiver) -> CheckResult:
    name = "mutation agrees with brute force"
    found = brute_force_pairs(quiver.algebra, distinct_summands(quiver))
    expected = set(quiver.index)
    actual = {pair.key for pair in found}
    if actual != expected or len(found) != len(quiver):
        detail = f"brute force found {len(found)} pairs, mutation found {len(quiver)}"
        logging.warning("Check %s failed: %s", name, detail)
        return CheckResult(name, False, detail)
    return CheckResult(name, True, f"{len(found)} pairs")


def base_suite(quiver: ExchangeQuiver, action: GroupAction) -> List[CheckResult]:
    summands = distinct_summands(quiver)
    return [
        check_orientation(quiver),
        check_fac_ordering(quiver),
        check_quiver_shape(quiver),
        check_brute_force(quiver),
        check_sincere_p_part(quiver),
        check_faithful_tilting(quiver),
        check_p_part_uniqueness(quiver),
        check_approximation(quiver),
        check_silting_roundtrip(quiver),
        check_tau_twist(action, summands),
        check_pair_transport(quiver, action),
        check_torsion_stability(quiver, action),
        check_complex_stability(quiver, action),
    ]


# Induction and restriction


def _skew_projectives(skew: SkewAlgebra) -> List[Representation]:
    return [projective(skew.algebra, index) for index in range(skew.algebra.vertex_count)]


def check_adjunction(skew: SkewAlgebra, modules: Sequence[Representation]) -> CheckResult:
    """Hom(F M, N) = Hom(M, H N) and Hom(N, F M) = Hom(H N, M) in dimension."""
    targets = _skew_projectives(skew) + [induce(skew, module) for module in modules]
    cases = [(module, target) for module in modules for target in targets]

    def balanced(case: Tuple[Representation, Representation]) -> bool:
        module, target = case
        induced = induce(skew, module)
        restricted = restrict(skew, target)
        return (
            hom_dimension(induced, target) == hom_dimension(module, restricted)
            and hom_dimension(target, induced) == hom_dimension(restricted, module)
        )

    return _run("induction is adjoint to restriction", cases, balanced, lambda case: module_label(case[0]))


def check_restriction_of_induction(skew: SkewAlgebra, modules: Sequence[Representation]) -> CheckResult:
    action = skew.action

    def matches(module: Representation) -> bool:
        twists = [action.twist(module, g) for g in range(skew.group.order)]
        return is_isomorphic(restrict(skew, induce(skew, module)), direct_sum(twists, module.algebra)[0])

    return _run("restriction of induction is the sum of twists", modules, matches, _module_label)


def check_stable_restriction(skew: SkewAlgebra, stable: Sequence[SttPair]) -> CheckResult:
    def matches(pair: SttPair) -> bool:
        module = pair.t_module
        copies = direct_sum([module] * skew.group.order, module.algebra)[0]
        return is_isomorphic(restrict(skew, induce(skew, module)), copies)

    return _run("restriction of induction of a stable module is |G| copies", stable, matches, lambda pair: pair.label())


def check_restriction_intertwiners(skew: SkewAlgebra, modules: Sequence[Representation]) -> CheckResult:
    targets = _skew_projectives(skew) + [induce(skew, module) for module in modules]
    return _run(
        "restriction is stable through y -> g y",
        targets,
        lambda target: verify_restriction_intertwiners(skew, target),
        lambda target: f"module of dimension {target.dim}",
    )


def check_induction_stability(skew: SkewAlgebra, stable: Sequence[SttPair], characters: CharacterGroup) -> CheckResult:
    return _run(
        "induction of a stable module is character stable",
        stable,
        lambda pair: verify_induction_stability(skew, pair.t_module, characters),
        lambda pair: pair.label(),
    )


def _exact(first: ModuleMap, second: ModuleMap) -> bool:
    """0 -> X -first-> Y -second-> Z -> 0 is exact."""
    if not first.is_injective() or not second.is_surjective():
        return False
    if not second.compose(first).is_zero():
        return False
    return first.rank + second.rank == first.target.dim


def check_exactness(skew: SkewAlgebra, modules: Sequence[Representation]) -> CheckResult:
    """F and H keep 0 -> syzygy -> cover -> M -> 0 exact."""

    def exact(module: Representation) -> bool:
        cover = projective_cover(module)
        inclusion = kernel(cover)[1]
        if not _exact(inclusion, cover):
            return False
        first, second = induce_map(skew, inclusion), induce_map(skew, cover)
        if not _exact(first, second):
            return False
        down_first = ModuleMap(restrict(skew, first.source), restrict(skew, first.target), first.matrix)
        down_second = ModuleMap(down_first.target, restrict(skew, second.target), second.matrix)
        return _exact(down_first, down_second)

    return _run("induction and restriction are exact", modules, exact, _module_label)


def check_tau_induction(skew: SkewAlgebra, modules: Sequence[Representation]) -> CheckResult:
    """tau F M = F tau M, compared over the basic reduction."""
    return _run(
        "induction commutes with tau",
        modules,
        lambda module: is_isomorphic(
            tau(morita_restrict(skew, induce(skew, module))),
            morita_restrict(skew, induce(skew, tau(module))),
        ),
        _module_label,
    )


def check_induced_rigid_pairs(skew: SkewAlgebra, stable: Sequence[SttPair]) -> CheckResult:
    def rigid(pair: SttPair) -> bool:
        image = induced_pair(skew, pair)
        return is_tau_rigid_pair(image.t_module, image.p_parts)

    return _run("induction keeps tau-rigid pairs", stable, rigid, lambda pair: pair.label())


def check_bijection(report: BijectionReport) -> List[CheckResult]:
    counts = f"{len(report.base_stable)} stable pairs against {len(report.basic_stable)}"
    return [
        CheckResult("induced pairs are character stable", report.into_stable, counts),
        CheckResult("induction is injective on stable pairs", report.injective, counts),
        CheckResult("induction is a bijection on stable pairs", report.bijective, counts),
        CheckResult("induction keeps tilting pairs tilting", report.tilting_preserved, counts),
    ]


def skew_suite(report: BijectionReport) -> List[CheckResult]:
    skew = report.skew
    summands = distinct_summands(report.base_quiver)
    stable = [report.base_quiver.vertices[position] for position in report.base_stable]
    return check_bijection(report) + [
        check_adjunction(skew, summands),
        check_restriction_of_induction(skew, summands),
        check_stable_restriction(skew, stable),
        check_restriction_intertwiners(skew, summands),
        check_induction_stability(skew, stable, report.characters),
        check_exactness(skew, summands),
        check_tau_induction(skew, summands),
        check_induced_rigid_pairs(skew, stable),
        check_stable_count(report),
    ]


def check_stable_count(report: BijectionReport) -> CheckResult:
    detail = f"{len(report.base_quiver)} and {len(report.basic_quiver)} pairs, {len(report.base_stable)} and {len(report.basic_stable)} stable"
    return CheckResult("stable pair counts agree", len(report.base_stable) == len(report.basic_stable), detail)


# Products of two swapped blocks


def block_idempotents(algebra: Algebra) -> List[List[int]]:
    """Vertices of each connected block, found from the nonzero e_j A e_i."""
    graph = nx.Graph()
    graph.add_nodes_from(range(algebra.vertex_count))
    for i, source in enumerate(algebra.idempotents):
        for j, target in enumerate(algebra.idempotents):
            if i != j and algebra.sandwich(target, source).dim:
                graph.add_edge(i, j)
    return sorted(sorted(component) for component in nx.connected_components(graph))


def swapped_block(action: GroupAction) -> Optional[List[int]]:
    """The first block when there are two blocks and some generator exchanges them."""
    blocks = block_idempotents(action.algebra)
    if len(blocks) != 2:
        return None
    for s in action.generators:
        permutation = action.permutations[s]
        if sorted(permutation[index] for index in blocks[0]) == blocks[1]:
            return blocks[0]
    return None


def check_product_oracle(action: GroupAction, quiver: ExchangeQuiver, stable: Sequence[int], max_vertices: int) -> Optional[CheckResult]:
    """For A = B x B with the blocks swapped, pairs number |B|^2 and stable pairs |B|."""
    block = swapped_block(action)
    if block is None:
        return None
    algebra = action.algebra
    idempotents = [algebra.idempotents[index] for index in block]
    e = algebra.combination([algebra.field.one] * len(idempotents), idempotents)
    labels = [algebra.vertex_label(index) for index in block]
    corner = corner_algebra(algebra, e, idempotents, labels)[0]
    count = len(enumerate_pairs(corner, max_vertices))
    passed = len(quiver) == count * count and len(stable) == count
    return CheckResult(
        "stable pairs of a swapped product match one block",
        passed,
        f"one block has {count} pairs; the product has {len(quiver)} with {len(stable)} stable",
    )
