"""Skew group algebras, induction and restriction, characters and the stable-pair correspondence."""

import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from stable_tau.algebra import (
    Algebra,
    BasicReduction,
    basic_reduction,
    lift_primitive_idempotents,
    validate_automorphism,
)
from stable_tau.common import InputError, InternalError, RefusedError, ResourceAbort, suggest_prime
from stable_tau.config import CLASS_TILTING, DEFAULT_MAX_VERTICES, IDEMPOTENT_SEARCH_TRIALS, SUGGESTED_PRIMES
from stable_tau.group_action import GroupAction, action_from_generators, is_g_stable_module, stable_filter, twist_module
from stable_tau.groups import FiniteGroup, group_from_table
from stable_tau.linalg import (
    Element,
    FieldSpec,
    Matrix,
    Subspace,
    Vector,
    block_diagonal,
    diagonal_matrix,
    from_columns,
    solve,
)
from stable_tau.modules import ModuleMap, Representation, module_label, projective, top_generators
from stable_tau.mutation import ExchangeQuiver, enumerate_pairs
from stable_tau.polynomials import roots_of_unity
from stable_tau.tau import SttPair, pair_from_module


@dataclass(frozen=True, eq=False)
class SkewAlgebra:
    base: Algebra
    action: GroupAction
    # Basis element (b_i, g) sits at g * dim(base) + i.
    algebra: Algebra

    @property
    def group(self) -> FiniteGroup:
        return self.action.group

    def index(self, basis_index: int, g: int) -> int:
        return g * self.base.dim + basis_index

    def element(self, base_element: Sequence[Element], g: int) -> Vector:
        """The element (x, g) of the skew algebra."""
        values = [self.algebra.field.zero] * self.algebra.dim
        for i, value in enumerate(base_element):
            values[self.index(i, g)] = value
        return tuple(values)

    def group_element(self, g: int) -> Vector:
        return self.element(self.base.unit, g)

    @cached_property
    def reduction(self) -> BasicReduction:
        return basic_reduction(self.algebra)


def skew_algebra(action: GroupAction) -> SkewAlgebra:
    """A G with (x g)(y h) = (x g(y)) gh and primitive idempotents refining the (e_v, 1)."""
    base = action.algebra
    group = action.group
    field_spec = base.field
    if field_spec.p and group.order % field_spec.p == 0:
        raise InputError(f"|G| = {group.order} is not invertible over {field_spec.label}")
    n, size = base.dim, base.dim * group.order
    basis = [base.basis_vector(i) for i in range(n)]

    def place(vector: Vector, g: int) -> Vector:
        values = [field_spec.zero] * size
        values[g * n:(g + 1) * n] = vector
        return tuple(values)

    structure = []
    for g in range(group.order):
        for i in range(n):
            row = []
            for h in range(group.order):
                for j in range(n):
                    row.append(place(base.multiply(basis[i], action.maps[g].column(j)), group.multiply(g, h)))
            structure.append(tuple(row))
    labels = tuple(f"{base.labels[i]}*{group.label(g)}" for g in range(group.order) for i in range(n))
    carrier = Algebra(field_spec, labels, tuple(structure), place(base.unit, group.identity))
    seeds = [place(e, group.identity) for e in base.idempotents]
    idempotents = lift_primitive_idempotents(carrier, seeds)
    names = []
    for f in idempotents:
        seed = next(v for v, e in enumerate(seeds) if carrier.multiply(e, f) == f)
        count = sum(1 for earlier in names if earlier[0] == seed)
        names.append((seed, count))
    vertex_labels = tuple(base.vertex_label(seed) + "'" * count for seed, count in names)
    carrier = carrier.with_idempotents(idempotents, vertex_labels)
    logging.info("Skew group algebra has dimension %d and %d primitive idempotents", carrier.dim, len(idempotents))
    return SkewAlgebra(base, action, carrier)


# Induction and restriction


def induce(skew: SkewAlgebra, module: Representation) -> Representation:
    """F M = A G (x)_A M with blocks g (x) M; (b h) sends block g to block hg by h g acting through (hg)^-1."""
    base, group = skew.base, skew.group
    field_spec = base.field
    m = module.dim
    size = m * group.order
    action: List[Matrix] = []
    for h in range(group.order):
        for i in range(base.dim):
            rows = [[field_spec.zero] * size for _ in range(size)]
            for g in range(group.order):
                target = group.multiply(h, g)
                twisted = skew.action.inverse_map(target).column(i)
                block = module.act(twisted)
                for r in range(m):
                    rows[target * m + r][g * m:(g + 1) * m] = block.entries[r]
            # Appended in skew index order h * dim + i.
            action.append(Matrix(field_spec, size, size, tuple(tuple(row) for row in rows)))
    return Representation(skew.algebra, size, tuple(action))


def induce_map(skew: SkewAlgebra, morphism: ModuleMap) -> ModuleMap:
    source = induce(skew, morphism.source)
    target = induce(skew, morphism.target)
    matrix = block_diagonal(skew.base.field, [morphism.matrix] * skew.group.order)
    return ModuleMap(source, target, matrix)


def restrict(skew: SkewAlgebra, module: Representation) -> Representation:
    """H N: the base acts through x -> (x, 1)."""
    identity = skew.group.identity
    action = tuple(module.action[skew.index(i, identity)] for i in range(skew.base.dim))
    return Representation(skew.base, module.dim, action)


def morita_restrict(skew: SkewAlgebra, module: Representation) -> Representation:
    """e N as a module over the basic algebra e (A G) e."""
    reduction = skew.reduction
    basic = reduction.algebra
    if reduction.is_trivial:
        return Representation(basic, module.dim, module.action, module.projective_indices)
    space = Subspace(module.field, module.dim, module.act(reduction.idempotent).columns())
    action = []
    for column in reduction.embedding.columns():
        matrix = module.act(column)
        images = []
        for vector in space.basis:
            coordinates = space.coordinates(matrix.apply(vector))
            if coordinates is None:
                raise InternalError("The corner of the basic reduction does not preserve e N")
            images.append(coordinates)
        action.append(from_columns(module.field, images, space.dim))
    return Representation(basic, space.dim, tuple(action))


# Characters


@dataclass(frozen=True, eq=False)
class CharacterGroup:
    group: FiniteGroup
    field: FieldSpec
    # Values on every group element; the trivial character comes first.
    characters: Tuple[Tuple[Element, ...], ...]
    complete: bool

    def __len__(self) -> int:
        return len(self.characters)

    @cached_property
    def as_group(self) -> FiniteGroup:
        positions = {chi: position for position, chi in enumerate(self.characters)}
        table = [
            [positions[tuple(self.field.reduce(a * b) for a, b in zip(chi, psi))] for psi in self.characters]
            for chi in self.characters
        ]
        labels = ["triv"] + [f"chi{position}" for position in range(1, len(self.characters))]
        return group_from_table(table, list(range(1, len(self.characters))), labels)


def _extend_character(group: FiniteGroup, field_spec: FieldSpec, values: Sequence[Element]) -> Optional[Tuple[Element, ...]]:
    chi: Dict[int, Element] = {group.identity: field_spec.one}
    for element, generator, predecessor in group.cayley_order[1:]:
        chi[element] = field_spec.reduce(values[generator] * chi[predecessor])
    for a in range(group.order):
        for b in range(group.order):
            if chi[group.multiply(a, b)] != field_spec.reduce(chi[a] * chi[b]):
                return None
    return tuple(chi[g] for g in range(group.order))


def character_group(group: FiniteGroup, field_spec: FieldSpec) -> CharacterGroup:
    """All homomorphisms G -> k* with values in the field."""
    candidates = [roots_of_unity(field_spec, group.element_order(s)) for s in group.generators]
    found: List[Tuple[Element, ...]] = []
    for values in itertools.product(*candidates):
        chi = _extend_character(group, field_spec, values)
        if chi is not None and chi not in found:
            found.append(chi)
    trivial = tuple(field_spec.one for _ in range(group.order))
    found.sort(key=lambda chi: (chi != trivial, chi))
    complete = len(found) == group.commutator_quotient_order
    if not complete:
        logging.warning(
            "Only %d of %d characters exist over %s", len(found), group.commutator_quotient_order, field_spec.label
        )
    return CharacterGroup(group, field_spec, tuple(found), complete)


def chi_action(skew: SkewAlgebra, chi: Sequence[Element]) -> Matrix:
    """The automorphism (x, g) -> chi(g) (x, g)."""
    values = [chi[g] for g in range(skew.group.order) for _ in range(skew.base.dim)]
    matrix = diagonal_matrix(skew.algebra.field, values)
    validate_automorphism(skew.algebra, matrix)
    return matrix


def character_action(skew: SkewAlgebra, characters: CharacterGroup) -> GroupAction:
    group = characters.as_group
    maps = [chi_action(skew, characters.characters[g]) for g in group.generators]
    return action_from_generators(skew.algebra, group, maps)


def descend_automorphism(skew: SkewAlgebra, automorphism: Matrix) -> Matrix:
    """psi(b) = x phi(b) y on e A e, with x in e A phi(e), y in phi(e) A e, xy = e and yx = phi(e)."""
    reduction = skew.reduction
    if reduction.is_trivial:
        return automorphism
    algebra = skew.algebra
    field_spec = algebra.field
    e = reduction.idempotent
    image = automorphism.apply(e)
    left = algebra.sandwich(e, image).basis
    right = algebra.sandwich(image, e).basis
    goal = e + image
    for _ in range(IDEMPOTENT_SEARCH_TRIALS):
        x = algebra.random_element(left)
        columns = [algebra.multiply(x, r) + algebra.multiply(r, x) for r in right]
        coefficients = solve(from_columns(field_spec, columns, 2 * algebra.dim), goal) if columns else None
        if coefficients is not None:
            y = algebra.combination(coefficients, right)
            break
    else:
        raise ResourceAbort("Could not conjugate the basic idempotent onto its image")
    corner = Subspace(field_spec, algebra.dim, reduction.embedding.columns())
    images = []
    for column in reduction.embedding.columns():
        coordinates = corner.coordinates(algebra.product(x, automorphism.apply(column), y))
        if coordinates is None:
            raise InternalError("Descended automorphism left the basic algebra")
        images.append(coordinates)
    basic = reduction.algebra
    matrix = from_columns(field_spec, images, basic.dim)
    validate_automorphism(basic, matrix)
    return matrix


def character_action_on_basic(skew: SkewAlgebra, characters: CharacterGroup) -> GroupAction:
    """The character action carried to the basic reduction; it is an action up to inner automorphisms."""
    group = characters.as_group
    maps = [descend_automorphism(skew, chi_action(skew, characters.characters[g])) for g in group.generators]
    return action_from_generators(skew.reduction.algebra, group, maps, check_compatibility=False)


# Intertwiner checks


def verify_induction_stability(skew: SkewAlgebra, module: Representation, characters: CharacterGroup) -> bool:
    """For each chi, theta = chi(g)^-1 on block g is an isomorphism from the chi^-1 twist of F T to F T."""
    if not is_g_stable_module(module, skew.action):
        raise InputError(f"Induction stability needs a G-stable module, {module_label(module)} is not")
    induced = induce(skew, module)
    field_spec = skew.algebra.field
    for chi in characters.characters:
        inverse = [field_spec.inverse(value) for value in chi]
        theta = diagonal_matrix(field_spec, [inverse[g] for g in range(skew.group.order) for _ in range(module.dim)])
        twisted = twist_module(induced, chi_action(skew, inverse), chi_action(skew, chi))
        candidate = ModuleMap(twisted, induced, theta)
        if not candidate.is_homomorphism() or not candidate.is_isomorphism():
            return False
    return True


def verify_restriction_intertwiners(skew: SkewAlgebra, module: Representation) -> bool:
    """y -> g y is an isomorphism from the g-twist of H N to H N for every g."""
    restricted = restrict(skew, module)
    action = skew.action
    for g in range(skew.group.order):
        twisted = twist_module(restricted, action.maps[g], action.inverse_map(g))
        candidate = ModuleMap(twisted, restricted, module.act(skew.group_element(g)))
        if not candidate.is_homomorphism() or not candidate.is_isomorphism():
            return False
    return True


# The stable-pair correspondence


def induced_pair(skew: SkewAlgebra, pair: SttPair) -> SttPair:
    """(e F T, P') over the basic reduction, P' read off as the vertices missing from e F T."""
    image = pair_from_module(morita_restrict(skew, induce(skew, pair.t_module)))
    base = skew.base
    projectives = [morita_restrict(skew, induce(skew, projective(base, index))) for index in pair.p_parts]
    induced_vertices = {index for module in projectives for index, _ in top_generators(module)}
    if induced_vertices != set(image.p_parts):
        raise InternalError(f"Induced projectives of {pair.label()} do not match the support of the induced module")
    return image


@dataclass
class BijectionReport:
    skew: SkewAlgebra
    base_quiver: ExchangeQuiver
    basic_quiver: ExchangeQuiver
    characters: CharacterGroup
    base_stable: List[int]
    basic_stable: List[int]
    matches: Dict[int, int] = field(default_factory=dict)

    @property
    def into_stable(self) -> bool:
        return set(self.matches.values()) <= set(self.basic_stable)

    @property
    def injective(self) -> bool:
        return len(set(self.matches.values())) == len(self.matches)

    @property
    def bijective(self) -> bool:
        return self.injective and set(self.matches.values()) == set(self.basic_stable)

    @property
    def tilting_preserved(self) -> bool:
        return all(
            self.basic_quiver.annotations[target].classification == CLASS_TILTING
            for source, target in self.matches.items()
            if self.base_quiver.annotations[source].classification == CLASS_TILTING
        )


def require_characters(group: FiniteGroup, field_spec: FieldSpec, primes: Sequence[int] = SUGGESTED_PRIMES) -> CharacterGroup:
    if not group.is_abelian:
        raise RefusedError("The correspondence is only verified for abelian groups; the character data of a non-abelian group is incomplete")
    characters = character_group(group, field_spec)
    if not characters.complete:
        prime = suggest_prime(group.exponent, group.order, primes)
        hint = f"; try --field Fp:{prime}" if prime else ""
        raise RefusedError(
            f"Only {len(characters)} of {group.commutator_quotient_order} characters exist over {field_spec.label}{hint}"
        )
    return characters


def verify_bijection(
    action: GroupAction,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    primes: Sequence[int] = SUGGESTED_PRIMES,
) -> BijectionReport:
    characters = require_characters(action.group, action.algebra.field, primes)
    base_quiver = enumerate_pairs(action.algebra, max_vertices)
    base_stable = stable_filter(base_quiver, action)
    skew = skew_algebra(action)
    basic_quiver = enumerate_pairs(skew.reduction.algebra, max_vertices)
    basic_stable = stable_filter(basic_quiver, character_action_on_basic(skew, characters))
    report = BijectionReport(skew, base_quiver, basic_quiver, characters, base_stable, basic_stable)
    for position in base_stable:
        pair = base_quiver.vertices[position]
        image = induced_pair(skew, pair)
        target = basic_quiver.find(image)
        if target is None:
            raise InternalError(f"The induced pair {image.label()} of {pair.label()} is not support tau-tilting")
        report.matches[position] = target
    logging.info(
        "Induction sends %d stable pairs to %d of %d stable pairs", len(base_stable), len(set(report.matches.values())), len(basic_stable)
    )
    return report
