"""The Auslander-Reiten translate and support tau-tilting predicates."""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import List, Sequence, Tuple

from stable_tau.algebra import Algebra
from stable_tau.approximation import is_left_approximation, minimal_left_approximation
from stable_tau.linalg import Subspace
from stable_tau.modules import (
    ModuleMap,
    Representation,
    class_id,
    cokernel,
    decompose,
    direct_sum,
    hom_space,
    is_indecomposable,
    is_isomorphic,
    kernel,
    module_label,
    projective_components,
    projective_cover,
    projective_morphism,
    regular_module,
)


@dataclass(frozen=True, eq=False)
class ProjPresentation:
    module: Representation
    differential: ModuleMap
    cover: ModuleMap

    @property
    def p1(self) -> Representation:
        return self.differential.source

    @property
    def p0(self) -> Representation:
        return self.differential.target


@dataclass(frozen=True, eq=False)
class SttPair:
    algebra: Algebra
    t_parts: Tuple[Representation, ...]
    p_parts: Tuple[int, ...] = ()

    @cached_property
    def t_module(self) -> Representation:
        return direct_sum(self.t_parts, self.algebra)[0]

    @cached_property
    def key(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        return tuple(sorted(class_id(part) for part in self.t_parts)), tuple(sorted(self.p_parts))

    @property
    def size(self) -> int:
        return len(self.t_parts) + len(self.p_parts)

    def label(self) -> str:
        parts = [module_label(part) for part in self.t_parts] or ["0"]
        text = " ⊕ ".join(parts)
        if self.p_parts:
            projectives = " ⊕ ".join(f"P{self.algebra.vertex_label(index)}" for index in sorted(self.p_parts))
            text = f"({text}, {projectives})"
        return text


def pair_from_module(module: Representation) -> SttPair:
    """The pair (T, P) with P every projective P_i such that Hom(P_i, T) = 0."""
    parts = basic_parts(decompose(module))
    p_parts = tuple(index for index, count in enumerate(module.dim_vector) if count == 0)
    return SttPair(module.algebra, tuple(parts), p_parts)


def basic_parts(modules: Sequence[Representation]) -> List[Representation]:
    """One module per isomorphism class, keeping the first occurrence."""
    seen = set()
    result = []
    for module in modules:
        if module.dim == 0:
            continue
        identifier = class_id(module)
        if identifier not in seen:
            seen.add(identifier)
            result.append(module)
    return result


# Presentations, transpose and dual


def minimal_presentation(module: Representation) -> ProjPresentation:
    cover = projective_cover(module)
    syzygy, inclusion = kernel(cover)
    syzygy_cover = projective_cover(syzygy)
    differential = ModuleMap(syzygy_cover.source, cover.source, inclusion.matrix @ syzygy_cover.matrix)
    return ProjPresentation(module, differential, cover)


def transpose(module: Representation) -> Representation:
    """Tr M over the opposite algebra, the cokernel of Hom(d, A)."""
    algebra = module.algebra
    opposite = algebra.opposite
    presentation = minimal_presentation(module)
    p1_indices = presentation.p1.projective_indices or ()
    p0_indices = presentation.p0.projective_indices or ()
    components = projective_components(presentation.differential)
    # Hom(P_i, A) is e_i A, which is the projective of the opposite algebra at i.
    swapped = [[components[k][l] for k in range(len(p0_indices))] for l in range(len(p1_indices))]
    dual_differential = projective_morphism(opposite, p0_indices, p1_indices, swapped)
    return cokernel(dual_differential)[0]


def dual(module: Representation) -> Representation:
    """D N = Hom_k(N, k) as a module over the opposite algebra."""
    action = tuple(matrix.transpose for matrix in module.action)
    return Representation(module.algebra.opposite, module.dim, action)


def tau(module: Representation) -> Representation:
    return dual(transpose(module))


# Rigidity


def is_tau_rigid(module: Representation) -> bool:
    return not hom_space(module, tau(module))


def is_tau_rigid_pair(module: Representation, projectives: Sequence[int]) -> bool:
    # Hom(P_i, X) is e_i X.
    if any(module.dim_vector[index] for index in projectives):
        return False
    return is_tau_rigid(module)


def validate_stt_pair(pair: SttPair) -> bool:
    algebra = pair.algebra
    if pair.size != algebra.vertex_count:
        logging.warning("Pair %s has %d summands, expected %d", pair.label(), pair.size, algebra.vertex_count)
        return False
    if len(set(pair.p_parts)) != len(pair.p_parts):
        return False
    for position, part in enumerate(pair.t_parts):
        if not is_indecomposable(part):
            logging.warning("Summand %s of %s is decomposable", module_label(part), pair.label())
            return False
        if any(is_isomorphic(part, other) for other in pair.t_parts[:position]):
            logging.warning("Pair %s is not basic", pair.label())
            return False
    if not is_tau_rigid_pair(pair.t_module, pair.p_parts):
        logging.warning("Pair %s is not a tau-rigid pair", pair.label())
        return False
    return True


def check_via_approximation(pair: SttPair) -> bool:
    """A -> T' -> T'' -> 0 with a left add T-approximation and T', T'' in add T."""
    algebra = pair.algebra
    family = list(pair.t_parts)
    approximation = minimal_left_approximation(regular_module(algebra), family)
    if not is_left_approximation(approximation.morphism, family):
        return False
    remainder = cokernel(approximation.morphism)[0]
    for part in decompose(remainder):
        if not any(is_isomorphic(part, member) for member in family):
            logging.warning("Cokernel summand %s of %s is outside add T", module_label(part), pair.label())
            return False
    return True


# Tilting


def projective_dimension_at_most_one(module: Representation) -> bool:
    return minimal_presentation(module).differential.is_injective()


def ext1_dimension(source: Representation, target: Representation) -> int:
    """dim Ext^1(source, target) = dim Hom(syzygy, target) minus maps extending to the cover."""
    cover = projective_cover(source)
    syzygy, inclusion = kernel(cover)
    all_maps = hom_space(syzygy, target)
    if not all_maps:
        return 0
    extended = [(h.matrix @ inclusion.matrix).flatten() for h in hom_space(cover.source, target)]
    size = target.dim * syzygy.dim
    return len(all_maps) - Subspace(source.field, size, extended).dim


def is_classical_tilting(module: Representation) -> bool:
    algebra = module.algebra
    if not projective_dimension_at_most_one(module):
        return False
    if ext1_dimension(module, module):
        return False
    return len(basic_parts(decompose(module))) == algebra.vertex_count
