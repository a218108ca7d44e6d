"""Group actions on algebras, twisting and stability."""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from stable_tau.algebra import Algebra, validate_automorphism
from stable_tau.common import InputError, InternalError
from stable_tau.groups import FiniteGroup, trivial_group
from stable_tau.linalg import Element, Matrix, Vector, block_diagonal, identity_matrix, invert
from stable_tau.modules import (
    ModuleMap,
    Representation,
    fac_contains,
    find_isomorphism,
    is_isomorphic,
    projective,
    projective_sum,
    top_generators,
)
from stable_tau.mutation import ExchangeQuiver, canonical_pair
from stable_tau.silting import TwoTermComplex, homotopy_equivalent
from stable_tau.tau import SttPair


@dataclass(frozen=True, eq=False)
class GroupAction:
    algebra: Algebra
    group: FiniteGroup
    # maps[g] is the automorphism of g, columns are images of basis elements.
    maps: Tuple[Matrix, ...]

    def apply(self, g: int, element: Sequence[Element]) -> Vector:
        return self.maps[g].apply(element)

    def inverse_map(self, g: int) -> Matrix:
        return self.maps[self.group.inverse(g)]

    @property
    def generators(self) -> Tuple[int, ...]:
        return self.group.generators

    @cached_property
    def permutations(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(projective_permutation(self, g) for g in range(self.group.order))

    def twist(self, module: Representation, g: int) -> Representation:
        return twist_module(module, self.maps[g], self.inverse_map(g))


def action_from_generators(
    algebra: Algebra,
    group: FiniteGroup,
    generator_maps: Sequence[Matrix],
    check_compatibility: bool = True,
) -> GroupAction:
    """Extend generator automorphisms along the Cayley graph, maps[s * g] = maps[s] maps[g]."""
    if len(generator_maps) != len(group.generators):
        raise InputError(f"Need {len(group.generators)} generator maps, got {len(generator_maps)}")
    for matrix in generator_maps:
        validate_automorphism(algebra, matrix)
    maps: Dict[int, Matrix] = {group.identity: identity_matrix(algebra.field, algebra.dim)}
    for element, generator, predecessor in group.cayley_order[1:]:
        maps[element] = generator_maps[generator] @ maps[predecessor]
    action = GroupAction(algebra, group, tuple(maps[g] for g in range(group.order)))
    if check_compatibility:
        validate_action(action)
    return action


def validate_action(action: GroupAction) -> None:
    group = action.group
    for a in range(group.order):
        for b in range(group.order):
            if action.maps[group.multiply(a, b)] != action.maps[a] @ action.maps[b]:
                raise InputError(
                    f"The generator maps do not define an action: {group.label(a)} and {group.label(b)} do not compose"
                )


def trivial_action(algebra: Algebra) -> GroupAction:
    group = trivial_group()
    return GroupAction(algebra, group, (identity_matrix(algebra.field, algebra.dim),))


# Twisting


def twist_module(module: Representation, automorphism: Matrix, inverse: Optional[Matrix] = None) -> Representation:
    """^s M: the same space with b acting as s^-1(b)."""
    if inverse is None:
        inverse = invert(automorphism)
        if inverse is None:
            raise ValueError("Twisting needs an invertible map")
    action = tuple(module.act(column) for column in inverse.columns())
    return Representation(module.algebra, module.dim, action)


def projective_permutation(action: GroupAction, g: int) -> Tuple[int, ...]:
    """pi with ^g P_i isomorphic to P_pi(i)."""
    result = []
    for index in range(action.algebra.vertex_count):
        generators = top_generators(action.twist(projective(action.algebra, index), g))
        if len(generators) != 1:
            raise InternalError("A twisted indecomposable projective has a decomposable top")
        result.append(generators[0][0])
    return tuple(result)


def _standard_isomorphism(action: GroupAction, g: int, indices: Sequence[int]) -> Tuple[Tuple[int, ...], Matrix]:
    """Indices pi(i) and the block isomorphism from the sum of P_pi(i) to the twisted sum of P_i."""
    algebra = action.algebra
    permutation = action.permutations[g]
    blocks = []
    for index in indices:
        twisted = action.twist(projective(algebra, index), g)
        iso = find_isomorphism(projective(algebra, permutation[index]), twisted)
        if iso is None:
            raise InternalError("Twisted projective is not isomorphic to its permuted standard projective")
        blocks.append(iso.matrix)
    return tuple(permutation[index] for index in indices), block_diagonal(algebra.field, blocks)


def twist_complex(complex_: TwoTermComplex, action: GroupAction, g: int) -> TwoTermComplex:
    """^g of a two-term complex, written again between standard projective sums."""
    algebra = action.algebra
    p1_indices, u1 = _standard_isomorphism(action, g, complex_.p1.projective_indices or ())
    p0_indices, u0 = _standard_isomorphism(action, g, complex_.p0.projective_indices or ())
    inverse = invert(u0)
    if inverse is None:
        raise InternalError("Projective isomorphism is not invertible")
    p1 = projective_sum(algebra, p1_indices)
    p0 = projective_sum(algebra, p0_indices)
    return TwoTermComplex(ModuleMap(p1, p0, inverse @ complex_.d @ u1))


def twist_pair(pair: SttPair, action: GroupAction, g: int) -> SttPair:
    twisted = [action.twist(part, g) for part in pair.t_parts]
    p_parts = tuple(sorted(action.permutations[g][index] for index in pair.p_parts))
    result = canonical_pair(pair.algebra, twisted)
    return SttPair(pair.algebra, result.t_parts, p_parts)


# Stability


def is_g_stable_module(module: Representation, action: GroupAction) -> bool:
    return all(is_isomorphic(action.twist(module, s), module) for s in action.generators)


def is_g_stable_pair(pair: SttPair, action: GroupAction) -> bool:
    projectives = set(pair.p_parts)
    for s in action.generators:
        if {action.permutations[s][index] for index in projectives} != projectives:
            return False
    return is_g_stable_module(pair.t_module, action)


def is_g_stable_torsion(module: Representation, action: GroupAction, summands: Sequence[Representation]) -> bool:
    """Fac T is closed under twisting, tested on ``summands``."""
    for s in action.generators:
        for summand in summands:
            if fac_contains(module, summand) != fac_contains(module, action.twist(summand, s)):
                return False
    return True


def is_g_stable_complex(complex_: TwoTermComplex, action: GroupAction) -> bool:
    return all(homotopy_equivalent(twist_complex(complex_, action, s), complex_) for s in action.generators)


def stable_filter(quiver: ExchangeQuiver, action: GroupAction) -> List[int]:
    """Mark every vertex with its stability and return the stable ones in vertex order."""
    stable = []
    for position, pair in enumerate(quiver.vertices):
        flag = is_g_stable_pair(pair, action)
        quiver.annotations[position].stable = flag
        if flag:
            stable.append(position)
    logging.info("%d of %d pairs are stable under a group of order %d", len(stable), len(quiver), action.group.order)
    return stable
