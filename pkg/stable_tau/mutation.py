"""Left mutation of support tau-tilting pairs and the exchange quiver."""

import itertools
import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Deque, Dict, List, Optional, Sequence, Tuple

import networkx as nx

from stable_tau.algebra import Algebra
from stable_tau.approximation import minimal_left_approximation
from stable_tau.common import InternalError, ResourceAbort
from stable_tau.config import (
    CLASS_SUPPORT_TAU_TILTING,
    CLASS_TAU_TILTING,
    CLASS_TILTING,
    DEFAULT_MAX_VERTICES,
)
from stable_tau.modules import (
    Representation,
    class_id,
    cokernel,
    decompose,
    direct_sum,
    fac_contains,
    is_faithful,
    is_sincere,
    module_label,
    projective,
)
from stable_tau.tau import SttPair, basic_parts, is_classical_tilting, is_tau_rigid, validate_stt_pair


PairKey = Tuple[Tuple[int, ...], Tuple[int, ...]]


@dataclass(frozen=True)
class ExchangeArrow:
    source: int
    target: int
    # Index into the T-part of the source pair.
    summand: int


@dataclass
class VertexInfo:
    sincere: bool
    faithful: bool
    classification: str
    stable: Optional[bool] = None


@dataclass
class ExchangeQuiver:
    algebra: Algebra
    vertices: List[SttPair] = field(default_factory=list)
    arrows: List[ExchangeArrow] = field(default_factory=list)
    annotations: List[VertexInfo] = field(default_factory=list)
    # Summands X of each vertex with X in Fac U, i.e. no downward mutation.
    skipped: Dict[int, List[int]] = field(default_factory=dict)
    index: Dict[PairKey, int] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def source_index(self) -> int:
        return self._unique(self.to_networkx().in_degree, "source")

    @property
    def sink_index(self) -> int:
        return self._unique(self.to_networkx().out_degree, "sink")

    def _unique(self, degrees, name: str) -> int:
        found = [vertex for vertex, degree in degrees if degree == 0]
        if len(found) != 1:
            raise InternalError(f"Exchange quiver has {len(found)} vertices that look like a {name}")
        return found[0]

    def find(self, pair: SttPair) -> Optional[int]:
        return self.index.get(pair.key)

    def add_vertex(self, pair: SttPair) -> int:
        position = len(self.vertices)
        self.vertices.append(pair)
        self.annotations.append(annotate(pair))
        self.index[pair.key] = position
        return position

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        for position, (pair, info) in enumerate(zip(self.vertices, self.annotations)):
            graph.add_node(
                position,
                label=pair.label(),
                sincere=info.sincere,
                faithful=info.faithful,
                classification=info.classification,
                stable=info.stable,
            )
        for arrow in self.arrows:
            graph.add_edge(arrow.source, arrow.target, summand=module_label(self.vertices[arrow.source].t_parts[arrow.summand]))
        return graph

    def stable_indices(self) -> List[int]:
        return [position for position, info in enumerate(self.annotations) if info.stable]


def annotate(pair: SttPair) -> VertexInfo:
    module = pair.t_module
    if pair.p_parts:
        classification = CLASS_SUPPORT_TAU_TILTING
    elif is_classical_tilting(module):
        classification = CLASS_TILTING
    else:
        classification = CLASS_TAU_TILTING
    return VertexInfo(is_sincere(module), is_faithful(module), classification)


def canonical_pair(algebra: Algebra, parts: Sequence[Representation]) -> SttPair:
    """The pair with T-part ``parts`` sorted canonically and P-part forced by Hom(P, T) = 0."""
    ordered = sorted(basic_parts(parts), key=lambda part: (part.dim_vector, class_id(part)))
    module = direct_sum(ordered, algebra)[0]
    p_parts = tuple(index for index, count in enumerate(module.dim_vector) if count == 0)
    return SttPair(algebra, tuple(ordered), p_parts)


def initial_pair(algebra: Algebra) -> SttPair:
    return canonical_pair(algebra, [projective(algebra, index) for index in range(algebra.vertex_count)])


def left_mutation(pair: SttPair, position: int) -> Optional[SttPair]:
    """Mutate away the T-part summand at ``position``; None when it lies in Fac of the rest."""
    algebra = pair.algebra
    removed = pair.t_parts[position]
    rest = [part for index, part in enumerate(pair.t_parts) if index != position]
    rest_module = direct_sum(rest, algebra)[0]
    if fac_contains(rest_module, removed):
        return None
    approximation = minimal_left_approximation(removed, rest)
    replacement = cokernel(approximation.morphism)[0]
    mutated = canonical_pair(algebra, rest + decompose(replacement))
    if not validate_stt_pair(mutated):
        raise InternalError(f"Mutation of {pair.label()} at {module_label(removed)} gave the invalid pair {mutated.label()}")
    return mutated


def enumerate_pairs(algebra: Algebra, max_vertices: int = DEFAULT_MAX_VERTICES) -> ExchangeQuiver:
    """Breadth-first closure of (A, 0) under left mutation."""
    quiver = ExchangeQuiver(algebra)
    start = initial_pair(algebra)
    quiver.add_vertex(start)
    frontier: Deque[int] = deque([0])
    layer = 0
    while frontier:
        logging.info("Exchange quiver layer %d: %d pairs to mutate, %d found so far", layer, len(frontier), len(quiver))
        next_frontier: Deque[int] = deque()
        for current in frontier:
            pair = quiver.vertices[current]
            for position in range(len(pair.t_parts)):
                mutated = left_mutation(pair, position)
                if mutated is None:
                    quiver.skipped.setdefault(current, []).append(position)
                    continue
                target = quiver.find(mutated)
                if target is None:
                    if len(quiver) >= max_vertices:
                        raise ResourceAbort(
                            f"More than {max_vertices} support tau-tilting pairs; the algebra is possibly tau-tilting infinite"
                        )
                    target = quiver.add_vertex(mutated)
                    next_frontier.append(target)
                quiver.arrows.append(ExchangeArrow(current, target, position))
        frontier = next_frontier
        layer += 1
    logging.info("Exchange quiver has %d vertices and %d arrows", len(quiver), len(quiver.arrows))
    return quiver


def brute_force_pairs(algebra: Algebra, indecomposables: Sequence[Representation]) -> List[SttPair]:
    """Every support tau-tilting pair whose T-part is built from ``indecomposables``."""
    candidates = sorted(basic_parts(indecomposables), key=lambda part: (part.dim_vector, class_id(part)))
    n = algebra.vertex_count
    found: List[SttPair] = []
    for size in range(n + 1):
        for chosen in itertools.combinations(candidates, size):
            module = direct_sum(chosen, algebra)[0]
            zeros = [index for index, count in enumerate(module.dim_vector) if count == 0]
            if len(zeros) < n - size:
                continue
            if size and not is_tau_rigid(module):
                continue
            for p_parts in itertools.combinations(zeros, n - size):
                found.append(SttPair(algebra, tuple(chosen), p_parts))
    logging.debug("Brute force found %d pairs among %d indecomposables", len(found), len(candidates))
    return found


def distinct_summands(quiver: ExchangeQuiver) -> List[Representation]:
    """The distinct indecomposable T-part summands over all vertices."""
    return basic_parts([part for pair in quiver.vertices for part in pair.t_parts])
