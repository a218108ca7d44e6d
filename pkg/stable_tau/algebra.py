"""Finite-dimensional algebras given by structure constants."""

import logging
from dataclasses import dataclass, replace
from functools import cached_property
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from stable_tau.common import InputError, InternalError, NotSplitError, engine_random, parse_coefficient
from stable_tau.config import IDEMPOTENT_SEARCH_TRIALS
from stable_tau.linalg import (
    Element,
    FieldSpec,
    Matrix,
    Subspace,
    Vector,
    from_columns,
    identity_matrix,
    invert,
    kernel_basis,
    linear_combination,
    solve,
    unit_vector,
    vector_add,
    vector_combination,
    vector_scale,
)
from stable_tau.polynomials import eigenvalues
from stable_tau.quiver import Arrow, Path, QuiverPresentation


@dataclass(frozen=True, eq=False)
class Algebra:
    field: FieldSpec
    labels: Tuple[str, ...]
    # structure[i][j] holds the coordinates of b_i * b_j.
    structure: Tuple[Tuple[Vector, ...], ...]
    unit: Vector
    idempotents: Tuple[Vector, ...] = ()
    vertex_labels: Tuple[str, ...] = ()
    presentation: Optional[QuiverPresentation] = None
    paths: Tuple[Path, ...] = ()

    def __post_init__(self) -> None:
        size = len(self.labels)
        if len(self.structure) != size or any(len(row) != size for row in self.structure):
            raise ValueError("Structure constants do not match the basis")
        if len(self.unit) != size:
            raise ValueError("Unit vector does not match the basis")
        if self.vertex_labels and len(self.vertex_labels) != len(self.idempotents):
            raise ValueError("Every idempotent needs a vertex label")

    def __repr__(self) -> str:
        return f"Algebra(dim={self.dim}, field={self.field.label}, simples={len(self.idempotents)})"

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def vertex_count(self) -> int:
        return len(self.idempotents)

    def vertex_label(self, index: int) -> str:
        return self.vertex_labels[index] if self.vertex_labels else str(index + 1)

    @property
    def zero(self) -> Vector:
        return tuple(self.field.zero for _ in range(self.dim))

    def basis_vector(self, index: int) -> Vector:
        return unit_vector(self.field, self.dim, index)

    def multiply(self, x: Sequence[Element], y: Sequence[Element]) -> Vector:
        field = self.field
        result = [field.zero] * self.dim
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            row = self.structure[i]
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                factor = xi * yj
                for k, value in enumerate(row[j]):
                    if value:
                        result[k] = result[k] + factor * value
        return tuple(field.reduce(value) for value in result)

    def product(self, *factors: Sequence[Element]) -> Vector:
        result: Vector = self.unit
        for factor in factors:
            result = self.multiply(result, factor)
        return result

    def add(self, x: Sequence[Element], y: Sequence[Element]) -> Vector:
        return vector_add(self.field, x, y)

    def subtract(self, x: Sequence[Element], y: Sequence[Element]) -> Vector:
        return vector_add(self.field, x, vector_scale(self.field, self.field.reduce(-self.field.one), y))

    def scale(self, factor: Element, x: Sequence[Element]) -> Vector:
        return vector_scale(self.field, factor, x)

    def combination(self, coefficients: Sequence[Element], elements: Sequence[Sequence[Element]]) -> Vector:
        return vector_combination(self.field, coefficients, elements, self.dim)

    def is_zero_element(self, x: Sequence[Element]) -> bool:
        return all(value == 0 for value in x)

    def random_element(self, within: Optional[Sequence[Sequence[Element]]] = None) -> Vector:
        rng = engine_random()
        spanning = within if within is not None else [self.basis_vector(i) for i in range(self.dim)]
        coefficients = [self.field.random_element(rng) for _ in spanning]
        return self.combination(coefficients, spanning)

    @cached_property
    def left_regular(self) -> Tuple[Matrix, ...]:
        """Matrices of left multiplication by each basis element."""
        n = self.dim
        return tuple(
            Matrix(self.field, n, n, tuple(tuple(self.structure[i][j][k] for j in range(n)) for k in range(n)))
            for i in range(n)
        )

    @cached_property
    def right_regular(self) -> Tuple[Matrix, ...]:
        n = self.dim
        return tuple(
            Matrix(self.field, n, n, tuple(tuple(self.structure[j][i][k] for j in range(n)) for k in range(n)))
            for i in range(n)
        )

    def left_matrix(self, x: Sequence[Element]) -> Matrix:
        return linear_combination(self.field, x, self.left_regular, self.dim, self.dim)

    def right_matrix(self, x: Sequence[Element]) -> Matrix:
        return linear_combination(self.field, x, self.right_regular, self.dim, self.dim)

    @cached_property
    def traces(self) -> Vector:
        return tuple(self.field.reduce(sum((matrix[k, k] for k in range(self.dim)), self.field.zero)) for matrix in self.left_regular)

    @cached_property
    def generators(self) -> Tuple[Vector, ...]:
        return algebra_generators(self)

    @cached_property
    def rad(self) -> Subspace:
        return _compute_radical(self)

    @cached_property
    def opposite(self) -> "Algebra":
        structure = tuple(tuple(self.structure[j][i] for j in range(self.dim)) for i in range(self.dim))
        result = Algebra(
            self.field,
            self.labels,
            structure,
            self.unit,
            self.idempotents,
            self.vertex_labels,
        )
        result.__dict__["opposite"] = self
        return result

    @cached_property
    def split_basic(self) -> bool:
        return is_split_basic(self)

    def with_idempotents(self, idempotents: Sequence[Vector], vertex_labels: Sequence[str] = ()) -> "Algebra":
        return replace(self, idempotents=tuple(idempotents), vertex_labels=tuple(vertex_labels))

    def span(self, vectors: Sequence[Sequence[Element]]) -> Subspace:
        return Subspace(self.field, self.dim, vectors)

    def sandwich(self, left: Sequence[Element], right: Sequence[Element], middle: Optional[Sequence[Sequence[Element]]] = None) -> Subspace:
        """The subspace left * X * right, X being the whole algebra unless given."""
        spanning = middle if middle is not None else [self.basis_vector(i) for i in range(self.dim)]
        return self.span([self.product(left, x, right) for x in spanning])


def make_algebra(
    field: FieldSpec,
    labels: Sequence[str],
    structure: Sequence[Sequence[Sequence[Element]]],
    unit: Sequence[Element],
    idempotents: Sequence[Sequence[Element]] = (),
    vertex_labels: Sequence[str] = (),
) -> Algebra:
    return Algebra(
        field,
        tuple(labels),
        tuple(tuple(tuple(cell) for cell in row) for row in structure),
        tuple(unit),
        tuple(tuple(e) for e in idempotents),
        tuple(vertex_labels),
    )


def validate_algebra(algebra: Algebra) -> None:
    """Associativity, unit and idempotent laws on the whole basis."""
    n = algebra.dim
    basis = [algebra.basis_vector(i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            left = algebra.structure[i][j]
            for k in range(n):
                if algebra.multiply(left, basis[k]) != algebra.multiply(basis[i], algebra.structure[j][k]):
                    raise InputError(f"Multiplication is not associative on ({algebra.labels[i]}, {algebra.labels[j]}, {algebra.labels[k]})")
    for index, vector in enumerate(basis):
        if algebra.multiply(algebra.unit, vector) != vector or algebra.multiply(vector, algebra.unit) != vector:
            raise InputError(f"Unit law fails on {algebra.labels[index]}")
    check_idempotents(algebra, algebra.idempotents)


def check_idempotents(algebra: Algebra, idempotents: Sequence[Vector]) -> None:
    if not idempotents:
        return
    total = algebra.zero
    for i, e in enumerate(idempotents):
        total = algebra.add(total, e)
        for j, f in enumerate(idempotents):
            expected = e if i == j else algebra.zero
            if algebra.multiply(e, f) != expected:
                raise InputError("Idempotents are not orthogonal idempotents")
    if total != algebra.unit:
        raise InputError("Idempotents do not sum to the unit")


def algebra_generators(algebra: Algebra) -> Tuple[Vector, ...]:
    """A subset of the basis generating the algebra together with the unit."""
    chosen: List[Vector] = []
    span = _generated_span(algebra, chosen)
    for index in range(algebra.dim):
        vector = algebra.basis_vector(index)
        if span.contains(vector):
            continue
        chosen.append(vector)
        span = _generated_span(algebra, chosen)
        if span.dim == algebra.dim:
            break
    return tuple(chosen)


def _generated_span(algebra: Algebra, generators: Sequence[Vector]) -> Subspace:
    space = algebra.span([algebra.unit, *generators]) if algebra.dim else algebra.span([])
    while True:
        products = [algebra.multiply(g, v) for g in generators for v in space.basis]
        grown = algebra.span(list(space.basis) + products)
        if grown.dim == space.dim:
            return space
        space = grown


# Construction from a bound quiver


def from_bound_quiver(quiver: QuiverPresentation, field: FieldSpec = FieldSpec.rationals()) -> Algebra:
    level = 1
    while True:
        if level > quiver.nilpotency_bound:
            raise InputError(
                f"Paths of length {quiver.nilpotency_bound} survive the relations; "
                "the quotient may be infinite-dimensional or the ideal is not admissible"
            )
        paths = sorted((path for length in range(level + 1) for path in quiver.paths_of_length(length)), key=quiver.sort_key)
        index = {path: position for position, path in enumerate(paths)}
        ideal = _ideal_closure(quiver, field, paths, index, level)
        if all(ideal.contains(unit_vector(field, len(paths), index[path])) for path in quiver.paths_of_length(level)):
            break
        level += 1

    size = len(paths)
    kept: List[Path] = []
    span = ideal
    for path in paths:
        vector = unit_vector(field, size, index[path])
        if not span.contains(vector):
            kept.append(path)
            span = Subspace(field, size, list(span.basis) + [vector])
    reducer = Subspace(field, size, list(ideal.basis) + [unit_vector(field, size, index[path]) for path in kept])
    offset = ideal.dim

    def residue(vector: Vector) -> Vector:
        coordinates = reducer.coordinates(vector)
        assert coordinates is not None
        return coordinates[offset:]

    dim = len(kept)
    zero_vector = tuple(field.zero for _ in range(dim))
    structure = []
    for left in kept:
        row = []
        for right in kept:
            # left * right means right first, then left.
            joined = quiver.concatenate(right, left)
            if joined is None or joined.length > level:
                row.append(zero_vector)
            else:
                row.append(residue(unit_vector(field, size, index[joined])))
        structure.append(tuple(row))

    trivial = [position for position, path in enumerate(kept) if path.length == 0]
    idempotents = tuple(unit_vector(field, dim, position) for position in trivial)
    unit = tuple(field.one if position in trivial else field.zero for position in range(dim))
    algebra = Algebra(
        field,
        tuple(quiver.path_label(path) for path in kept),
        tuple(structure),
        unit,
        idempotents,
        quiver.vertices,
        quiver,
        tuple(kept),
    )
    validate_algebra(algebra)
    logging.info("Built algebra of dimension %d with %d simples over %s", algebra.dim, algebra.vertex_count, field.label)
    return algebra


def _ideal_closure(
    quiver: QuiverPresentation,
    field: FieldSpec,
    paths: Sequence[Path],
    index: Mapping[Path, int],
    level: int,
) -> Subspace:
    size = len(paths)
    generators: List[Vector] = []
    for relation in quiver.relations:
        terms = [(parse_coefficient(field, coefficient, "Relation"), quiver.path_from_labels(labels)) for coefficient, labels in relation.terms]
        shortest = min(path.length for _, path in terms)
        source = terms[0][1].source
        target = quiver.target(terms[0][1])
        for before in (p for p in paths if quiver.target(p) == source):
            for after in (p for p in paths if p.source == target):
                if before.length + after.length + shortest > level:
                    continue
                vector = [field.zero] * size
                for coefficient, path in terms:
                    middle = quiver.concatenate(before, path)
                    joined = quiver.concatenate(middle, after) if middle is not None else None
                    if joined is not None and joined.length <= level:
                        position = index[joined]
                        vector[position] = field.reduce(vector[position] + coefficient)
                if any(vector):
                    generators.append(tuple(vector))
    return Subspace(field, size, generators)


# Radical


def radical(algebra: Algebra) -> Subspace:
    return algebra.rad


def _compute_radical(algebra: Algebra) -> Subspace:
    field = algebra.field
    n = algebra.dim
    if n == 0:
        return algebra.span([])
    p = field.characteristic
    if p == 0 or p > n:
        traces = algebra.traces
        gram = Matrix(
            field,
            n,
            n,
            tuple(
                tuple(field.reduce(sum((algebra.structure[i][j][k] * traces[k] for k in range(n)), field.zero)) for j in range(n))
                for i in range(n)
            ),
        )
        return algebra.span(kernel_basis(gram.transpose).columns())
    return _radical_small_characteristic(algebra)


def _radical_small_characteristic(algebra: Algebra) -> Subspace:
    """Iterated p-power trace refinement, valid in characteristic p <= dim."""
    field = algebra.field
    n = algebra.dim
    p = field.characteristic
    depth = 0
    while p ** (depth + 1) <= n:
        depth += 1
    current: List[Vector] = [algebra.basis_vector(i) for i in range(n)]
    basis = [algebra.basis_vector(i) for i in range(n)]
    for level in range(depth + 1):
        power = p ** level
        if not current:
            break
        rows = [tuple(_power_trace_functional(algebra, algebra.multiply(x, b), power) for x in current) for b in basis]
        kernel = kernel_basis(Matrix(field, len(rows), len(current), tuple(rows)))
        current = [vector_combination(field, coefficients, current, n) for coefficients in kernel.columns()]
    return algebra.span(current)


def _power_trace_functional(algebra: Algebra, z: Vector, power: int) -> int:
    p = algebra.field.characteristic
    lifted = [[int(value) for value in row] for row in algebra.left_matrix(z).entries]
    result = _integer_matrix_power(lifted, power)
    trace = sum(result[i][i] for i in range(len(result)))
    if trace % power:
        raise InternalError(f"Power trace {trace} is not divisible by {power}")
    return (trace // power) % p


def _integer_matrix_power(matrix: List[List[int]], exponent: int) -> List[List[int]]:
    size = len(matrix)
    result = [[1 if r == c else 0 for c in range(size)] for r in range(size)]
    base = matrix
    while exponent:
        if exponent & 1:
            result = _integer_matmul(result, base)
        base = _integer_matmul(base, base)
        exponent >>= 1
    return result


def _integer_matmul(left: List[List[int]], right: List[List[int]]) -> List[List[int]]:
    columns = list(zip(*right))
    return [[sum(a * b for a, b in zip(row, column)) for column in columns] for row in left]


# Idempotents


def corner_algebra(
    algebra: Algebra,
    idempotent: Sequence[Element],
    idempotents: Sequence[Sequence[Element]] = (),
    vertex_labels: Sequence[str] = (),
) -> Tuple[Algebra, Matrix]:
    """The algebra eAe and the matrix embedding its basis into A."""
    field = algebra.field
    e = tuple(idempotent)
    # Carried idempotents go first so they stay basis elements of the corner.
    space = algebra.span([tuple(f) for f in idempotents] + list(algebra.sandwich(e, e).basis))
    basis = list(space.basis)

    def coordinates(vector: Vector) -> Vector:
        result = space.coordinates(vector)
        if result is None:
            raise InternalError("Product left the corner algebra")
        return result

    structure = tuple(tuple(coordinates(algebra.multiply(x, y)) for y in basis) for x in basis)
    corner = Algebra(
        field,
        tuple(f"c{index}" for index in range(len(basis))),
        structure,
        coordinates(e),
        tuple(coordinates(tuple(f)) for f in idempotents),
        tuple(vertex_labels),
    )
    return corner, from_columns(field, basis, algebra.dim)


def _semisimple_quotient(algebra: Algebra) -> Tuple[Algebra, Matrix, Matrix]:
    """A/rad A with the projection matrix and a lifting matrix of its basis."""
    field = algebra.field
    rad = algebra.rad
    complement = rad.complement()
    full = from_columns(field, list(rad.basis) + complement, algebra.dim)
    inverse = invert(full)
    assert inverse is not None
    offset = rad.dim
    projection = Matrix(field, len(complement), algebra.dim, inverse.entries[offset:])
    lifting = from_columns(field, complement, algebra.dim)
    structure = tuple(tuple(projection.apply(algebra.multiply(x, y)) for y in complement) for x in complement)
    quotient = Algebra(
        field,
        tuple(f"s{index}" for index in range(len(complement))),
        structure,
        projection.apply(algebra.unit),
    )
    return quotient, projection, lifting


def refine_idempotent(algebra: Algebra, element: Sequence[Element]) -> Vector:
    """Newton iteration e <- 3e^2 - 2e^3 for an element idempotent modulo the radical."""
    e = tuple(element)
    field = algebra.field
    three, two = field.convert(3), field.convert(2)
    for _ in range(algebra.dim + 2):
        square = algebra.multiply(e, e)
        if square == e:
            return e
        cube = algebra.multiply(square, e)
        e = algebra.subtract(algebra.scale(three, square), algebra.scale(two, cube))
    if algebra.multiply(e, e) != e:
        raise InternalError("Idempotent refinement did not converge")
    return e


def find_nontrivial_idempotent(algebra: Algebra) -> Optional[Vector]:
    """An idempotent other than 0 and 1, or None if the search finds none.

    Zero divisors of A/rad A come from eigenvalues of candidate elements; the right
    ideal they generate has a left identity, which is found by a linear solve and
    then lifted through the radical.
    """
    quotient, projection, lifting = _semisimple_quotient(algebra)
    size = quotient.dim
    if size <= 1:
        return None
    for candidate in _idempotent_candidates(algebra):
        reduced = projection.apply(candidate)
        for value in eigenvalues(quotient.left_matrix(reduced)):
            shifted = quotient.subtract(reduced, quotient.scale(value, quotient.unit))
            if quotient.is_zero_element(shifted):
                continue
            ideal = quotient.span(quotient.left_matrix(shifted).columns())
            if ideal.dim in (0, size):
                continue
            identity = _left_identity(quotient, list(ideal.basis))
            if identity is None:
                continue
            lifted = lifting.apply(identity)
            idempotent = refine_idempotent(algebra, lifted)
            logging.debug("Split an idempotent of rank %d out of a semisimple part of dimension %d", ideal.dim, size)
            return idempotent
    return None


def _idempotent_candidates(algebra: Algebra) -> Iterator[Vector]:
    n = algebra.dim
    basis = [algebra.basis_vector(i) for i in range(n)]
    yield from basis
    for i in range(n):
        for j in range(i + 1, n):
            yield algebra.add(basis[i], basis[j])
    for _ in range(IDEMPOTENT_SEARCH_TRIALS):
        yield algebra.random_element()


def _left_identity(algebra: Algebra, ideal: Sequence[Vector]) -> Optional[Vector]:
    """An element e of the right ideal with e * r = r for every r in it."""
    field = algebra.field
    k = len(ideal)
    rows: List[List[Element]] = []
    rhs: List[Element] = []
    products = [[algebra.multiply(x, r) for x in ideal] for r in ideal]
    for r_index, r in enumerate(ideal):
        for coordinate in range(algebra.dim):
            rows.append([products[r_index][x_index][coordinate] for x_index in range(k)])
            rhs.append(r[coordinate])
    solution = solve(Matrix(field, len(rows), k, tuple(tuple(row) for row in rows)), rhs)
    if solution is None:
        return None
    return algebra.combination(solution, ideal)


def lift_primitive_idempotents(algebra: Algebra, seeds: Sequence[Sequence[Element]] = ()) -> Tuple[Vector, ...]:
    """A complete set of primitive orthogonal idempotents refining ``seeds``."""
    pending: List[Vector] = [tuple(seed) for seed in seeds] or [algebra.unit]
    check_idempotents(algebra, pending)
    result: List[Vector] = []
    while pending:
        e = pending.pop(0)
        corner, embedding = corner_algebra(algebra, e)
        top = corner.dim - corner.rad.dim
        if top == 1:
            result.append(e)
            continue
        piece = find_nontrivial_idempotent(corner)
        if piece is None:
            raise NotSplitError(
                f"The algebra does not split over {algebra.field.label}; "
                "a semisimple block has no idempotent or zero divisor in this field, try another field"
            )
        lifted = embedding.apply(piece)
        pending[:0] = [lifted, algebra.subtract(e, lifted)]
    logging.debug("Lifted %d primitive idempotents", len(result))
    return tuple(result)


def is_split_basic(algebra: Algebra) -> bool:
    if not algebra.idempotents:
        return False
    rad = algebra.rad
    if algebra.dim - rad.dim != len(algebra.idempotents):
        return False
    for e in algebra.idempotents:
        whole = algebra.sandwich(e, e).dim
        radical_part = algebra.sandwich(e, e, rad.basis).dim
        if whole - radical_part != 1:
            return False
    return True


def projectives_isomorphic(algebra: Algebra, first: Sequence[Element], second: Sequence[Element]) -> bool:
    """A e_i and A e_j are isomorphic iff e_i A e_j * e_j A e_i leaves the radical."""
    forward = algebra.sandwich(first, second).basis
    backward = algebra.sandwich(second, first).basis
    rad = algebra.rad
    return any(not rad.contains(algebra.multiply(x, y)) for x in forward for y in backward)


@dataclass(frozen=True, eq=False)
class BasicReduction:
    source: Algebra
    algebra: Algebra
    idempotent: Vector
    # Columns are the basis of the basic algebra written in the source basis.
    embedding: Matrix
    chosen: Tuple[int, ...]
    classes: Tuple[Tuple[int, ...], ...]

    @property
    def is_trivial(self) -> bool:
        return self.algebra is self.source

    def element(self, coordinates: Sequence[Element]) -> Vector:
        return self.embedding.apply(coordinates)

    def class_of(self, index: int) -> int:
        """Position in the basic algebra of the vertex equivalent to source idempotent ``index``."""
        for position, members in enumerate(self.classes):
            if index in members:
                return position
        raise IndexError(index)


def basic_reduction(algebra: Algebra) -> BasicReduction:
    if not algebra.idempotents:
        raise InputError("Basic reduction needs primitive idempotents")
    rad = algebra.rad
    for index, e in enumerate(algebra.idempotents):
        if algebra.sandwich(e, e).dim - algebra.sandwich(e, e, rad.basis).dim != 1:
            raise NotSplitError(
                f"The top at vertex {algebra.vertex_label(index)} is not one-dimensional over {algebra.field.label}, "
                "the algebra does not split over this field"
            )
    classes: List[List[int]] = []
    for index, e in enumerate(algebra.idempotents):
        for members in classes:
            if projectives_isomorphic(algebra, algebra.idempotents[members[0]], e):
                members.append(index)
                break
        else:
            classes.append([index])
    frozen_classes = tuple(tuple(members) for members in classes)
    if all(len(members) == 1 for members in classes):
        return BasicReduction(
            algebra,
            algebra,
            algebra.unit,
            identity_matrix(algebra.field, algebra.dim),
            tuple(range(algebra.vertex_count)),
            frozen_classes,
        )

    field = algebra.field
    chosen = tuple(members[0] for members in classes)
    chosen_idempotents = [algebra.idempotents[index] for index in chosen]
    e = algebra.combination([field.one] * len(chosen_idempotents), chosen_idempotents)
    vectors: List[Vector] = list(chosen_idempotents)
    labels = [f"e{algebra.vertex_label(index)}" for index in chosen]
    for source_position, source in enumerate(chosen_idempotents):
        for target_position, target in enumerate(chosen_idempotents):
            block = algebra.sandwich(target, source, rad.basis)
            for number, vector in enumerate(block.basis):
                vectors.append(vector)
                suffix = f"#{number + 1}" if block.dim > 1 else ""
                labels.append(f"{algebra.vertex_label(chosen[source_position])}->{algebra.vertex_label(chosen[target_position])}{suffix}")
    space = algebra.span(vectors)
    if space.dim != len(vectors):
        raise InternalError("Basic reduction basis is not independent")

    def coordinates(vector: Vector) -> Vector:
        result = space.coordinates(vector)
        if result is None:
            raise InternalError("Product left the basic algebra")
        return result

    structure = tuple(tuple(coordinates(algebra.multiply(x, y)) for y in vectors) for x in vectors)
    dim = len(vectors)
    basic = Algebra(
        field,
        tuple(labels),
        structure,
        coordinates(e),
        tuple(unit_vector(field, dim, position) for position in range(len(chosen))),
        tuple(algebra.vertex_label(index) for index in chosen),
    )
    logging.info("Basic reduction keeps %d of %d idempotents, dimension %d", len(chosen), algebra.vertex_count, dim)
    return BasicReduction(algebra, basic, e, from_columns(field, vectors, algebra.dim), chosen, frozen_classes)


def gabriel_quiver(algebra: Algebra) -> QuiverPresentation:
    if not algebra.split_basic:
        raise InputError("The Gabriel quiver needs a split basic algebra")
    rad = algebra.rad
    square = algebra.span([algebra.multiply(x, y) for x in rad.basis for y in rad.basis])
    vertices = tuple(algebra.vertex_label(index) for index in range(algebra.vertex_count))
    arrows: List[Arrow] = []
    for i, source in enumerate(algebra.idempotents):
        for j, target in enumerate(algebra.idempotents):
            count = algebra.sandwich(target, source, rad.basis).dim - algebra.sandwich(target, source, square.basis).dim
            for number in range(count):
                suffix = f"#{number + 1}" if count > 1 else ""
                arrows.append(Arrow(f"{vertices[i]}->{vertices[j]}{suffix}", vertices[i], vertices[j]))
    return QuiverPresentation(vertices, tuple(arrows))


# Automorphisms


Coefficients = Mapping[str, object]
ArrowImage = Union[str, Coefficients]


def validate_automorphism(algebra: Algebra, matrix: Matrix) -> None:
    """Raise InputError unless ``matrix`` is a unital, multiplicative and invertible map."""
    if matrix.shape != (algebra.dim, algebra.dim):
        raise InputError("Automorphism matrix has the wrong shape")
    if invert(matrix) is None:
        raise InputError("Algebra map is not invertible")
    if matrix.apply(algebra.unit) != algebra.unit:
        raise InputError("Algebra map does not preserve the unit")
    images = matrix.columns()
    for i in range(algebra.dim):
        for j in range(algebra.dim):
            if matrix.apply(algebra.structure[i][j]) != algebra.multiply(images[i], images[j]):
                raise InputError(f"Algebra map is not multiplicative on ({algebra.labels[i]}, {algebra.labels[j]})")


def is_automorphism(algebra: Algebra, matrix: Matrix) -> bool:
    try:
        validate_automorphism(algebra, matrix)
    except InputError:
        return False
    return True


def automorphism_from_quiver_map(
    algebra: Algebra,
    vertex_map: Mapping[str, str],
    arrow_images: Mapping[str, ArrowImage],
) -> Matrix:
    quiver = algebra.presentation
    if quiver is None:
        raise InputError("Quiver maps need an algebra built from a quiver")
    field = algebra.field
    vertices = {vertex: vertex_map.get(vertex, vertex) for vertex in quiver.vertices}
    if sorted(vertices.values()) != sorted(quiver.vertices):
        raise InputError("The vertex map is not a permutation of the vertices")
    for label in vertex_map:
        quiver.vertex_index(label)

    path_position: Dict[Path, int] = {path: position for position, path in enumerate(algebra.paths)}

    def trivial(vertex: str) -> Vector:
        return algebra.basis_vector(path_position[Path(quiver.vertex_index(vertex))])

    arrow_elements: List[Vector] = []
    for index, arrow in enumerate(quiver.arrows):
        raw = arrow_images.get(arrow.label, arrow.label)
        terms = {raw: 1} if isinstance(raw, str) else dict(raw)
        image = algebra.zero
        for label, coefficient in terms.items():
            target_index = quiver.arrow_index(label)
            target = quiver.arrows[target_index]
            if (target.source, target.target) != (vertices[arrow.source], vertices[arrow.target]):
                raise InputError(
                    f"Arrow {arrow.label}: {arrow.source}->{arrow.target} cannot map to "
                    f"{target.label}: {target.source}->{target.target} under the vertex map"
                )
            image = algebra.add(image, algebra.scale(parse_coefficient(field, coefficient, f"Image of arrow {arrow.label}"), algebra.basis_vector(path_position[Path(quiver.arrow_source(target_index), (target_index,))])))
        arrow_elements.append(image)
    for label in arrow_images:
        quiver.arrow_index(label)

    def path_image(path: Path) -> Vector:
        if not path.arrows:
            return trivial(vertices[quiver.vertices[path.source]])
        result = trivial(vertices[quiver.vertices[quiver.target(path)]])
        for index in reversed(path.arrows):
            result = algebra.multiply(result, arrow_elements[index])
        return result

    for relation in quiver.relations:
        value = algebra.zero
        for coefficient, labels in relation.terms:
            value = algebra.add(value, algebra.scale(parse_coefficient(field, coefficient, "Relation"), path_image(quiver.path_from_labels(labels))))
        if not algebra.is_zero_element(value):
            raise InputError("The quiver map does not preserve the relations")

    matrix = from_columns(field, [path_image(path) for path in algebra.paths], algebra.dim)
    validate_automorphism(algebra, matrix)
    return matrix
