"""Left modules as matrix representations and the maps between them."""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple
from weakref import WeakKeyDictionary

from stable_tau.algebra import Algebra, find_nontrivial_idempotent
from stable_tau.common import InternalError, ResourceAbort, engine_random
from stable_tau.config import DECOMPOSITION_FITTING_TRIALS, ISO_RANDOM_TRIALS
from stable_tau.linalg import (
    Element,
    FieldSpec,
    Matrix,
    Subspace,
    Vector,
    block_diagonal,
    column_space,
    from_columns,
    identity_matrix,
    invert,
    is_invertible,
    kernel_basis,
    linear_combination,
    matrix_power,
    rank,
    scale,
    submatrix,
    vector_combination,
    zero_matrix,
)
from stable_tau.polynomials import eigenvalues
from stable_tau.registry import IsoRegistry, registry_for


DimVector = Tuple[int, ...]


@dataclass(frozen=True, eq=False)
class Representation:
    algebra: Algebra
    dim: int
    # action[k] is the matrix of the k-th basis element of the algebra.
    action: Tuple[Matrix, ...]
    # Set when the module is literally P_{i_1} + ... + P_{i_r} in the standard bases.
    projective_indices: Optional[Tuple[int, ...]] = None

    def __post_init__(self) -> None:
        if len(self.action) != self.algebra.dim:
            raise ValueError(f"Need {self.algebra.dim} action matrices, got {len(self.action)}")
        for matrix in self.action:
            if matrix.shape != (self.dim, self.dim):
                raise ValueError(f"Action matrix has shape {matrix.shape}, expected {(self.dim, self.dim)}")

    def __repr__(self) -> str:
        return f"Representation(dim={self.dim}, dim_vector={self.dim_vector})"

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    @property
    def is_zero(self) -> bool:
        return self.dim == 0

    def act(self, element: Sequence[Element]) -> Matrix:
        return linear_combination(self.field, element, self.action, self.dim, self.dim)

    @cached_property
    def generator_action(self) -> Tuple[Matrix, ...]:
        return tuple(self.act(g) for g in self.algebra.generators)

    @cached_property
    def dim_vector(self) -> DimVector:
        return tuple(rank(self.act(e)) for e in self.algebra.idempotents)

    @cached_property
    def label(self) -> str:
        return module_label(self)


@dataclass(frozen=True, eq=False)
class ModuleMap:
    source: Representation
    target: Representation
    matrix: Matrix

    def __post_init__(self) -> None:
        if self.matrix.shape != (self.target.dim, self.source.dim):
            raise ValueError(f"Map matrix has shape {self.matrix.shape}, expected {(self.target.dim, self.source.dim)}")

    def compose(self, first: "ModuleMap") -> "ModuleMap":
        """self after first."""
        return ModuleMap(first.source, self.target, self.matrix @ first.matrix)

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    @property
    def rank(self) -> int:
        return rank(self.matrix)

    def is_injective(self) -> bool:
        return self.rank == self.source.dim

    def is_surjective(self) -> bool:
        return self.rank == self.target.dim

    def is_isomorphism(self) -> bool:
        return self.source.dim == self.target.dim and self.is_injective()

    def is_homomorphism(self) -> bool:
        return all(
            self.matrix @ left == right @ self.matrix
            for left, right in zip(self.source.generator_action, self.target.generator_action)
        )


def make_representation(algebra: Algebra, action: Sequence[Matrix], projective_indices: Optional[Sequence[int]] = None) -> Representation:
    dim = action[0].rows if action else 0
    indices = tuple(projective_indices) if projective_indices is not None else None
    return Representation(algebra, dim, tuple(action), indices)


def validate_representation(module: Representation) -> None:
    """Raise InternalError unless the action respects the multiplication and the unit."""
    algebra = module.algebra
    if module.act(algebra.unit) != identity_matrix(module.field, module.dim):
        raise InternalError("The unit does not act as the identity")
    for i in range(algebra.dim):
        for j in range(algebra.dim):
            if module.action[i] @ module.action[j] != module.act(algebra.structure[i][j]):
                raise InternalError(f"Action is not multiplicative on ({algebra.labels[i]}, {algebra.labels[j]})")


def zero_module(algebra: Algebra) -> Representation:
    empty = zero_matrix(algebra.field, 0, 0)
    return Representation(algebra, 0, tuple(empty for _ in range(algebra.dim)), ())


def regular_module(algebra: Algebra) -> Representation:
    return Representation(algebra, algebra.dim, algebra.left_regular)


def identity_map(module: Representation) -> ModuleMap:
    return ModuleMap(module, module, identity_matrix(module.field, module.dim))


def zero_map(source: Representation, target: Representation) -> ModuleMap:
    return ModuleMap(source, target, zero_matrix(source.field, target.dim, source.dim))


def _same_algebra(*modules: Representation) -> Algebra:
    algebra = modules[0].algebra
    if any(module.algebra is not algebra for module in modules):
        raise ValueError("Modules live over different algebras")
    return algebra


def _reshape(field: FieldSpec, flat: Sequence[Element], rows: int, cols: int) -> Matrix:
    return Matrix(field, rows, cols, tuple(tuple(flat[r * cols:(r + 1) * cols]) for r in range(rows)))


# Projectives


_PROJECTIVES: "WeakKeyDictionary[Algebra, Dict[int, Tuple[Subspace, Representation]]]" = WeakKeyDictionary()


def _projective_data(algebra: Algebra, index: int) -> Tuple[Subspace, Representation]:
    cache = _PROJECTIVES.setdefault(algebra, {})
    if index in cache:
        return cache[index]
    e = algebra.idempotents[index]
    # e_i comes first so it is the first basis vector of A e_i.
    vectors = [e] + [algebra.multiply(algebra.basis_vector(k), e) for k in range(algebra.dim)]
    space = algebra.span(vectors)

    def coordinates(vector: Vector) -> Vector:
        result = space.coordinates(vector)
        if result is None:
            raise InternalError("Left multiplication left the projective")
        return result

    action = tuple(
        from_columns(algebra.field, [coordinates(algebra.multiply(algebra.basis_vector(k), v)) for v in space.basis], space.dim)
        for k in range(algebra.dim)
    )
    module = Representation(algebra, space.dim, action, (index,))
    cache[index] = (space, module)
    return space, module


def projective(algebra: Algebra, index: int) -> Representation:
    """The indecomposable projective A e_i."""
    if not 0 <= index < algebra.vertex_count:
        raise IndexError(f"No idempotent with index {index}")
    return _projective_data(algebra, index)[1]


def projective_basis(algebra: Algebra, index: int) -> Tuple[Vector, ...]:
    """Basis of A e_i written as algebra elements, e_i first."""
    return _projective_data(algebra, index)[0].basis


def projective_coordinates(algebra: Algebra, index: int, element: Sequence[Element]) -> Vector:
    result = _projective_data(algebra, index)[0].coordinates(element)
    if result is None:
        raise ValueError(f"Element does not lie in the projective at vertex {algebra.vertex_label(index)}")
    return result


def projective_sum(algebra: Algebra, indices: Sequence[int]) -> Representation:
    if not indices:
        return zero_module(algebra)
    parts = [projective(algebra, index) for index in indices]
    if len(parts) == 1:
        return parts[0]
    action = tuple(block_diagonal(algebra.field, [part.action[k] for part in parts]) for k in range(algebra.dim))
    return Representation(algebra, sum(part.dim for part in parts), action, tuple(indices))


def _offsets(algebra: Algebra, indices: Sequence[int]) -> List[int]:
    offsets = [0]
    for index in indices:
        offsets.append(offsets[-1] + projective(algebra, index).dim)
    return offsets


def map_from_projective(index: int, target: Representation, element: Sequence[Element]) -> ModuleMap:
    """The map P_i -> M sending e_i to ``element``, which must lie in e_i M."""
    algebra = target.algebra
    images = [m.apply(element) for m in target.action]
    columns = [
        vector_combination(target.field, basis_vector, images, target.dim)
        for basis_vector in projective_basis(algebra, index)
    ]
    return ModuleMap(projective(algebra, index), target, from_columns(target.field, columns, target.dim))


def projective_morphism(
    algebra: Algebra,
    source_indices: Sequence[int],
    target_indices: Sequence[int],
    components: Sequence[Sequence[Sequence[Element]]],
) -> ModuleMap:
    """The map between projective sums given by right multiplication.

    ``components[t][s]`` is an element z of e_s A e_t; the block P_s -> P_t is a -> a z.
    """
    field = algebra.field
    source = projective_sum(algebra, source_indices)
    target = projective_sum(algebra, target_indices)
    rows: List[List[Element]] = [[field.zero] * source.dim for _ in range(target.dim)]
    source_offsets = _offsets(algebra, source_indices)
    target_offsets = _offsets(algebra, target_indices)
    for t, t_index in enumerate(target_indices):
        for s, s_index in enumerate(source_indices):
            z = components[t][s]
            if algebra.is_zero_element(z):
                continue
            for k, a in enumerate(projective_basis(algebra, s_index)):
                image = projective_coordinates(algebra, t_index, algebra.multiply(a, z))
                for r, value in enumerate(image):
                    rows[target_offsets[t] + r][source_offsets[s] + k] = value
    return ModuleMap(source, target, Matrix(field, target.dim, source.dim, tuple(tuple(row) for row in rows)))


def projective_components(morphism: ModuleMap) -> List[List[Vector]]:
    """Inverse of projective_morphism: the elements f(e_s) split by target summand."""
    source_indices = morphism.source.projective_indices
    target_indices = morphism.target.projective_indices
    if source_indices is None or target_indices is None:
        raise ValueError("Components exist only for maps between standard projective sums")
    algebra = morphism.source.algebra
    source_offsets = _offsets(algebra, source_indices)
    target_offsets = _offsets(algebra, target_indices)
    components: List[List[Vector]] = [[] for _ in target_indices]
    for s in range(len(source_indices)):
        # e_s is the first basis vector of its block.
        image = morphism.matrix.column(source_offsets[s])
        for t, t_index in enumerate(target_indices):
            block = image[target_offsets[t]:target_offsets[t + 1]]
            components[t].append(algebra.combination(block, projective_basis(algebra, t_index)))
    return components


# Submodules and quotients


def submodule(module: Representation, vectors: Sequence[Sequence[Element]]) -> Tuple[Representation, ModuleMap]:
    """The submodule with the given spanning vectors and its inclusion."""
    field = module.field
    space = Subspace(field, module.dim, vectors)
    action: List[Matrix] = []
    for matrix in module.action:
        columns = []
        for vector in space.basis:
            coordinates = space.coordinates(matrix.apply(vector))
            if coordinates is None:
                raise ValueError("Vectors do not span a submodule")
            columns.append(coordinates)
        action.append(from_columns(field, columns, space.dim))
    sub = Representation(module.algebra, space.dim, tuple(action))
    return sub, ModuleMap(sub, module, space.basis_matrix())


def quotient(module: Representation, vectors: Sequence[Sequence[Element]]) -> Tuple[Representation, ModuleMap]:
    """M / N for the submodule N spanned by ``vectors``, with the projection."""
    field = module.field
    space = Subspace(field, module.dim, vectors)
    complement = space.complement()
    full = from_columns(field, list(space.basis) + complement, module.dim)
    inverse = invert(full)
    if inverse is None:
        raise InternalError("Complement does not complete the basis")
    offset = space.dim
    size = len(complement)
    projection = Matrix(field, size, module.dim, inverse.entries[offset:])
    lifting = from_columns(field, complement, module.dim)
    action = tuple(projection @ matrix @ lifting for matrix in module.action)
    result = Representation(module.algebra, size, action)
    return result, ModuleMap(module, result, projection)


def kernel(morphism: ModuleMap) -> Tuple[Representation, ModuleMap]:
    return submodule(morphism.source, kernel_basis(morphism.matrix).columns())


def image(morphism: ModuleMap) -> Tuple[Representation, ModuleMap]:
    return submodule(morphism.target, morphism.matrix.columns())


def cokernel(morphism: ModuleMap) -> Tuple[Representation, ModuleMap]:
    return quotient(morphism.target, morphism.matrix.columns())


def direct_sum(modules: Sequence[Representation], algebra: Optional[Algebra] = None) -> Tuple[Representation, List[ModuleMap], List[ModuleMap]]:
    """The direct sum with its inclusions and projections."""
    if not modules:
        if algebra is None:
            raise ValueError("An empty direct sum needs its algebra")
        return zero_module(algebra), [], []
    algebra = _same_algebra(*modules)
    field = algebra.field
    action = tuple(block_diagonal(field, [module.action[k] for module in modules]) for k in range(algebra.dim))
    indices: Optional[Tuple[int, ...]] = ()
    for module in modules:
        if module.projective_indices is None or indices is None:
            indices = None
        else:
            indices = indices + module.projective_indices
    total = Representation(algebra, sum(module.dim for module in modules), action, indices)
    inclusions: List[ModuleMap] = []
    projections: List[ModuleMap] = []
    offset = 0
    for module in modules:
        positions = list(range(offset, offset + module.dim))
        identity = identity_matrix(field, total.dim)
        inclusions.append(ModuleMap(module, total, submatrix(identity, range(total.dim), positions)))
        projections.append(ModuleMap(total, module, submatrix(identity, positions, range(total.dim))))
        offset += module.dim
    return total, inclusions, projections


def _radical_vectors(module: Representation) -> List[Vector]:
    vectors: List[Vector] = []
    for r in module.algebra.rad.basis:
        vectors.extend(module.act(r).columns())
    return vectors


def radical_submodule(module: Representation) -> Tuple[Representation, ModuleMap]:
    """(rad A) M with its inclusion."""
    return submodule(module, _radical_vectors(module))


def top(module: Representation) -> Tuple[Representation, ModuleMap]:
    """M / (rad A) M with the quotient map."""
    return quotient(module, _radical_vectors(module))


def radical_layers(module: Representation) -> List[DimVector]:
    algebra = module.algebra
    field = module.field
    radical_actions = [module.act(r) for r in algebra.rad.basis]
    idempotent_actions = [module.act(e) for e in algebra.idempotents]
    current = Subspace.whole(field, module.dim)
    layers: List[DimVector] = []
    while current.dim:
        below = Subspace(field, module.dim, [m.apply(v) for m in radical_actions for v in current.basis])
        layers.append(tuple(
            Subspace(field, module.dim, [m.apply(v) for v in current.basis]).dim
            - Subspace(field, module.dim, [m.apply(v) for v in below.basis]).dim
            for m in idempotent_actions
        ))
        current = below
    return layers


def module_label(module: Representation) -> str:
    """Radical layers written top first, as in "1 / 2 2'"."""
    if module.dim == 0:
        return "0"
    algebra = module.algebra
    rows = []
    for layer in radical_layers(module):
        names = [algebra.vertex_label(index) for index, count in enumerate(layer) for _ in range(count)]
        rows.append(" ".join(names))
    return " / ".join(rows)


# Hom spaces


def hom_space(source: Representation, target: Representation) -> List[ModuleMap]:
    """A basis of Hom_A(source, target), solved one generator at a time."""
    _same_algebra(source, target)
    field = source.field
    m, n = source.dim, target.dim
    if m == 0 or n == 0:
        return []
    size = n * m
    basis: List[Vector] = identity_matrix(field, size).columns()
    for left, right in zip(source.generator_action, target.generator_action):
        if not basis:
            break
        residuals = []
        for flat in basis:
            x = _reshape(field, flat, n, m)
            residuals.append((x @ left - right @ x).flatten())
        solutions = kernel_basis(from_columns(field, residuals, size)).columns()
        basis = [vector_combination(field, coefficients, basis, size) for coefficients in solutions]
    return [ModuleMap(source, target, _reshape(field, flat, n, m)) for flat in basis]


def hom_dimension(source: Representation, target: Representation) -> int:
    return len(hom_space(source, target))


def endomorphism_algebra(module: Representation) -> Tuple[Algebra, List[Matrix]]:
    """End(M) as an algebra whose product b_i * b_j is h_i after h_j."""
    field = module.field
    maps = [h.matrix for h in hom_space(module, module)]
    size = module.dim * module.dim
    space = Subspace(field, size, [h.flatten() for h in maps])

    def coordinates(matrix: Matrix) -> Vector:
        result = space.coordinates(matrix.flatten())
        if result is None:
            raise InternalError("Composition left the endomorphism space")
        return result

    structure = tuple(tuple(coordinates(hi @ hj) for hj in maps) for hi in maps)
    unit = coordinates(identity_matrix(field, module.dim))
    labels = tuple(f"h{index}" for index in range(len(maps)))
    return Algebra(field, labels, structure, unit), maps


# Covers


def top_generators(module: Representation) -> List[Tuple[int, Vector]]:
    """Pairs (i, x) with x in e_i M whose classes form a basis of the top."""
    field = module.field
    span = Subspace(field, module.dim, _radical_vectors(module))
    chosen: List[Tuple[int, Vector]] = []
    for index, e in enumerate(module.algebra.idempotents):
        for vector in module.act(e).columns():
            if span.contains(vector):
                continue
            chosen.append((index, vector))
            span = Subspace(field, module.dim, list(span.basis) + [vector])
    return chosen


def projective_cover(module: Representation) -> ModuleMap:
    algebra = module.algebra
    generators = top_generators(module)
    cover = projective_sum(algebra, [index for index, _ in generators])
    blocks = [map_from_projective(index, module, vector).matrix for index, vector in generators]
    matrix = from_columns(module.field, [column for block in blocks for column in block.columns()], module.dim)
    return ModuleMap(cover, module, matrix)


def is_projective(module: Representation) -> bool:
    return projective_cover(module).source.dim == module.dim


def projective_index(module: Representation) -> Optional[int]:
    """i when the module is isomorphic to P_i, otherwise None."""
    generators = top_generators(module)
    if len(generators) != 1:
        return None
    index = generators[0][0]
    return index if projective(module.algebra, index).dim == module.dim else None


# Decomposition


@dataclass(frozen=True, eq=False)
class Summand:
    module: Representation
    # inclusion: summand -> ambient, projection: ambient -> summand.
    inclusion: Matrix
    projection: Matrix


def _split_along(module: Representation, first: Sequence[Vector], second: Sequence[Vector]) -> Tuple[Summand, Summand]:
    field = module.field
    full = from_columns(field, list(first) + list(second), module.dim)
    inverse = invert(full)
    if inverse is None:
        raise InternalError("Summands do not span the module")
    parts = []
    offset = 0
    for vectors in (first, second):
        size = len(vectors)
        inclusion = from_columns(field, list(vectors), module.dim)
        projection = Matrix(field, size, module.dim, inverse.entries[offset:offset + size])
        action = tuple(projection @ matrix @ inclusion for matrix in module.action)
        parts.append(Summand(Representation(module.algebra, size, action), inclusion, projection))
        offset += size
    return parts[0], parts[1]


def _fitting_split(module: Representation, maps: Sequence[Matrix]) -> Optional[Tuple[Summand, Summand]]:
    field = module.field
    rng = engine_random()
    identity = identity_matrix(field, module.dim)
    for _ in range(DECOMPOSITION_FITTING_TRIALS):
        phi = linear_combination(field, [field.random_element(rng) for _ in maps], maps, module.dim, module.dim)
        for value in eigenvalues(phi):
            psi = matrix_power(phi - scale(identity, value), module.dim)
            r = rank(psi)
            if 0 < r < module.dim:
                return _split_along(module, column_space(psi).basis, kernel_basis(psi).columns())
    return None


def _split(module: Representation) -> Optional[Tuple[Summand, Summand]]:
    if module.dim <= 1:
        return None
    maps = [h.matrix for h in hom_space(module, module)]
    if len(maps) == 1:
        return None
    endomorphisms, _ = endomorphism_algebra(module)
    if endomorphisms.dim - endomorphisms.rad.dim == 1:
        return None
    parts = _fitting_split(module, maps)
    if parts is not None:
        return parts
    idempotent = find_nontrivial_idempotent(endomorphisms)
    if idempotent is None:
        raise ResourceAbort(f"Decomposition search exhausted its budget on a module of dimension {module.dim}")
    field = module.field
    epsilon = linear_combination(field, idempotent, maps, module.dim, module.dim)
    complement = identity_matrix(field, module.dim) - epsilon
    return _split_along(module, column_space(epsilon).basis, column_space(complement).basis)


def decompose_with_maps(module: Representation) -> List[Summand]:
    """Indecomposable summands with their inclusions and projections, in splitting order."""
    field = module.field
    identity = identity_matrix(field, module.dim)
    pending = [Summand(module, identity, identity)]
    result: List[Summand] = []
    while pending:
        current = pending.pop(0)
        if current.module.dim == 0:
            continue
        parts = _split(current.module)
        if parts is None:
            result.append(current)
            continue
        pending[:0] = [
            Summand(part.module, current.inclusion @ part.inclusion, part.projection @ current.projection)
            for part in parts
        ]
    return result


def decompose(module: Representation) -> List[Representation]:
    """Indecomposable summands ordered by dimension vector, then by registry id."""
    registry = module_registry(module.algebra)
    parts = [summand.module for summand in decompose_with_maps(module)]
    return sorted(parts, key=lambda part: (part.dim_vector, registry.classify(part)))


def is_indecomposable(module: Representation) -> bool:
    return module.dim > 0 and _split(module) is None


# Isomorphism


def find_isomorphism(source: Representation, target: Representation) -> Optional[ModuleMap]:
    _same_algebra(source, target)
    if source.dim != target.dim or source.dim_vector != target.dim_vector:
        return None
    if source.dim == 0:
        return ModuleMap(source, target, zero_matrix(source.field, 0, 0))
    forward = hom_space(source, target)
    if not forward or not hom_space(target, source):
        return None
    field = source.field
    rng = engine_random()
    maps = [f.matrix for f in forward]
    for _ in range(ISO_RANDOM_TRIALS):
        candidate = linear_combination(field, [field.random_element(rng) for _ in maps], maps, target.dim, source.dim)
        if is_invertible(candidate):
            return ModuleMap(source, target, candidate)
    logging.debug("Random isomorphism search failed in dimension %d, decomposing", source.dim)
    return _isomorphism_by_decomposition(source, target)


def _indecomposable_isomorphism(source: Representation, target: Representation) -> Optional[Matrix]:
    # Some g after f leaves the radical of the local ring End(source) iff the two are isomorphic.
    backward = [g.matrix for g in hom_space(target, source)]
    for f in hom_space(source, target):
        if any(is_invertible(g @ f.matrix) for g in backward):
            return f.matrix
    return None


def _isomorphism_by_decomposition(source: Representation, target: Representation) -> Optional[ModuleMap]:
    source_parts = decompose_with_maps(source)
    target_parts = decompose_with_maps(target)
    if len(source_parts) != len(target_parts):
        return None
    field = source.field
    used = [False] * len(target_parts)
    total = zero_matrix(field, target.dim, source.dim)
    for part in source_parts:
        for position, candidate in enumerate(target_parts):
            if used[position] or candidate.module.dim_vector != part.module.dim_vector:
                continue
            iso = _indecomposable_isomorphism(part.module, candidate.module)
            if iso is not None:
                used[position] = True
                total = total + candidate.inclusion @ iso @ part.projection
                break
        else:
            return None
    return ModuleMap(source, target, total)


def is_isomorphic(source: Representation, target: Representation) -> bool:
    return find_isomorphism(source, target) is not None


def module_registry(algebra: Algebra) -> IsoRegistry[Representation]:
    return registry_for(algebra, lambda module: (module.dim, module.dim_vector), is_isomorphic)


def class_id(module: Representation) -> int:
    return module_registry(module.algebra).classify(module)


# Fac, sincerity, faithfulness


def fac_contains(generator: Representation, module: Representation) -> bool:
    """True iff the images of all maps generator -> module span it."""
    _same_algebra(generator, module)
    if module.dim == 0:
        return True
    columns = [column for f in hom_space(generator, module) for column in f.matrix.columns()]
    return Subspace(module.field, module.dim, columns).dim == module.dim


def is_sincere(module: Representation) -> bool:
    return all(count > 0 for count in module.dim_vector)


def annihilator(module: Representation) -> Subspace:
    algebra = module.algebra
    field = algebra.field
    flattened = [matrix.flatten() for matrix in module.action]
    solutions = kernel_basis(from_columns(field, flattened, module.dim * module.dim)).columns()
    return algebra.span(solutions)


def is_faithful(module: Representation) -> bool:
    return annihilator(module).dim == 0
