"""Minimal left approximations by additive closures of basic modules."""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from stable_tau.linalg import Matrix, Subspace, linear_combination
from stable_tau.modules import ModuleMap, Representation, direct_sum, endomorphism_algebra, hom_space


@dataclass(frozen=True, eq=False)
class Approximation:
    morphism: ModuleMap
    # One entry per summand of the target, naming which module of the basic family it copies.
    summand_indices: Tuple[int, ...]

    @property
    def target(self) -> Representation:
        return self.morphism.target


def _radical_endomorphisms(module: Representation) -> List[Matrix]:
    endomorphisms, maps = endomorphism_algebra(module)
    return [
        linear_combination(module.field, vector, maps, module.dim, module.dim)
        for vector in endomorphisms.rad.basis
    ]


def minimal_left_approximation(source: Representation, family: Sequence[Representation]) -> Approximation:
    """source -> U' with U' in add(family); ``family`` must be pairwise non-isomorphic indecomposables.

    For each U_k we keep maps source -> U_k spanning a complement of those that factor
    through a radical map, so the result is left minimal.
    """
    algebra = source.algebra
    field = source.field
    homs = [[f.matrix for f in hom_space(source, module)] for module in family]
    chosen: List[Tuple[int, Matrix]] = []
    for k, module in enumerate(family):
        if not homs[k]:
            continue
        factoring: List[Matrix] = []
        for l, other in enumerate(family):
            if l == k or not homs[l]:
                continue
            for h in hom_space(other, module):
                factoring.extend(h.matrix @ f for f in homs[l])
        for r in _radical_endomorphisms(module):
            factoring.extend(r @ f for f in homs[k])
        size = module.dim * source.dim
        span = Subspace(field, size, [m.flatten() for m in factoring])
        for f in homs[k]:
            if span.contains(f.flatten()):
                continue
            chosen.append((k, f))
            span = Subspace(field, size, list(span.basis) + [f.flatten()])
    targets = [family[k] for k, _ in chosen]
    target, _, _ = direct_sum(targets, algebra)
    rows = [row for _, f in chosen for row in f.entries]
    matrix = Matrix(field, target.dim, source.dim, tuple(rows))
    logging.debug("Left approximation uses %d summands", len(chosen))
    return Approximation(ModuleMap(source, target, matrix), tuple(k for k, _ in chosen))


def is_left_approximation(morphism: ModuleMap, family: Sequence[Representation]) -> bool:
    """Every map source -> U_k factors through ``morphism``."""
    field = morphism.source.field
    for module in family:
        direct = hom_space(morphism.source, module)
        if not direct:
            continue
        through = [g.matrix @ morphism.matrix for g in hom_space(morphism.target, module)]
        size = module.dim * morphism.source.dim
        reached = Subspace(field, size, [m.flatten() for m in through])
        if reached.dim != len(direct):
            return False
    return True
