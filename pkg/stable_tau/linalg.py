"""Exact dense linear algebra over the rationals and prime fields."""

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from sympy import isprime

from stable_tau.config import FIELD_PRIME_PREFIX, FIELD_RATIONALS, RANDOM_COEFFICIENT_BOUND


Element = Union[Fraction, int]
Vector = Tuple[Element, ...]


class FieldKind(Enum):
    RATIONALS = "Q"
    PRIME = "Fp"


@dataclass(frozen=True)
class FieldSpec:
    kind: FieldKind
    p: int = 0

    def __post_init__(self) -> None:
        if self.kind is FieldKind.PRIME:
            if self.p <= 0 or not isprime(self.p):
                raise ValueError(f"Prime field modulus must be prime, got {self.p}")
        elif self.p != 0:
            raise ValueError("The rational field takes no modulus")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(FieldKind.RATIONALS)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(FieldKind.PRIME, p)

    @classmethod
    def parse(cls, raw: str) -> "FieldSpec":
        text = raw.strip()
        if text in (FIELD_RATIONALS, "QQ", "rationals"):
            return cls.rationals()
        if text.startswith(FIELD_PRIME_PREFIX):
            text = text[len(FIELD_PRIME_PREFIX):]
        elif text.startswith("F") and text[1:].isdigit():
            text = text[1:]
        try:
            return cls.prime(int(text))
        except ValueError as error:
            raise ValueError(f"Field must be Q or Fp:<prime>, got {raw!r}") from error

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def label(self) -> str:
        return FIELD_RATIONALS if self.kind is FieldKind.RATIONALS else f"{FIELD_PRIME_PREFIX}{self.p}"

    @property
    def zero(self) -> Element:
        return Fraction(0) if self.kind is FieldKind.RATIONALS else 0

    @property
    def one(self) -> Element:
        return Fraction(1) if self.kind is FieldKind.RATIONALS else 1

    def reduce(self, value: Element) -> Element:
        if self.p:
            return value % self.p
        return value

    def convert(self, value: object) -> Element:
        if isinstance(value, str):
            value = Fraction(value.strip())
        if self.kind is FieldKind.RATIONALS:
            return Fraction(value)  # type: ignore[arg-type]
        fraction = Fraction(value)  # type: ignore[arg-type]
        if fraction.denominator % self.p == 0:
            raise ValueError(f"{value} has no image in F_{self.p}")
        return fraction.numerator * pow(fraction.denominator, -1, self.p) % self.p

    def inverse(self, value: Element) -> Element:
        if value == 0:
            raise ZeroDivisionError("Zero has no inverse")
        if self.p:
            return pow(value, -1, self.p)
        return 1 / Fraction(value)

    def divide(self, numerator: Element, denominator: Element) -> Element:
        return self.reduce(numerator * self.inverse(denominator))

    def random_element(self, rng: random.Random, bound: int = RANDOM_COEFFICIENT_BOUND) -> Element:
        if self.p:
            return rng.randrange(self.p)
        return Fraction(rng.randint(-bound, bound))

    def is_invertible_integer(self, value: int) -> bool:
        return not self.p or value % self.p != 0

    def format(self, value: Element) -> str:
        return str(value)


@dataclass(frozen=True, eq=False)
class Matrix:
    field: FieldSpec
    rows: int
    cols: int
    entries: Tuple[Vector, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("Matrix shape must be nonnegative")
        if len(self.entries) != self.rows or any(len(row) != self.cols for row in self.entries):
            raise ValueError("Matrix entries do not match its shape")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols}, {[list(map(str, row)) for row in self.entries]})"

    def __getitem__(self, index: Tuple[int, int]) -> Element:
        row, col = index
        return self.entries[row][col]

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return matmul(self, other)

    def __add__(self, other: "Matrix") -> "Matrix":
        return add(self, other)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return add(self, scale(other, -1))

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @cached_property
    def transpose(self) -> "Matrix":
        columns = tuple(zip(*self.entries)) if self.rows else ()
        if not self.rows:
            columns = tuple(() for _ in range(self.cols))
        return Matrix(self.field, self.cols, self.rows, tuple(tuple(col) for col in columns))

    def column(self, index: int) -> Vector:
        return tuple(row[index] for row in self.entries)

    def columns(self) -> List[Vector]:
        return [self.column(index) for index in range(self.cols)]

    def is_zero(self) -> bool:
        return all(value == 0 for row in self.entries for value in row)

    def flatten(self) -> Vector:
        return tuple(value for row in self.entries for value in row)

    def apply(self, vector: Sequence[Element]) -> Vector:
        if len(vector) != self.cols:
            raise ValueError(f"Vector of length {len(vector)} cannot be applied to a {self.rows}x{self.cols} matrix")
        reduce = self.field.reduce
        return tuple(reduce(sum((a * b for a, b in zip(row, vector)), self.field.zero)) for row in self.entries)


def from_rows(field: FieldSpec, rows: Iterable[Iterable[object]], cols: Optional[int] = None) -> Matrix:
    converted = tuple(tuple(field.convert(value) for value in row) for row in rows)
    width = len(converted[0]) if converted else (cols or 0)
    return Matrix(field, len(converted), width, converted)


def from_columns(field: FieldSpec, columns: Sequence[Sequence[Element]], rows: int) -> Matrix:
    if not columns:
        return Matrix(field, rows, 0, tuple(() for _ in range(rows)))
    entries = tuple(tuple(column[r] for column in columns) for r in range(rows))
    return Matrix(field, rows, len(columns), entries)


def zero_matrix(field: FieldSpec, rows: int, cols: int) -> Matrix:
    zero = field.zero
    return Matrix(field, rows, cols, tuple(tuple(zero for _ in range(cols)) for _ in range(rows)))


def identity_matrix(field: FieldSpec, size: int) -> Matrix:
    zero, one = field.zero, field.one
    return Matrix(field, size, size, tuple(tuple(one if r == c else zero for c in range(size)) for r in range(size)))


def diagonal_matrix(field: FieldSpec, values: Sequence[Element]) -> Matrix:
    size = len(values)
    zero = field.zero
    return Matrix(field, size, size, tuple(tuple(values[r] if r == c else zero for c in range(size)) for r in range(size)))


def matmul(left: Matrix, right: Matrix) -> Matrix:
    if left.cols != right.rows:
        raise ValueError(f"Cannot multiply {left.rows}x{left.cols} by {right.rows}x{right.cols}")
    field = left.field
    reduce = field.reduce
    zero = field.zero
    right_columns = right.transpose.entries
    entries = tuple(
        tuple(reduce(sum((a * b for a, b in zip(row, column) if a and b), zero)) for column in right_columns)
        for row in left.entries
    )
    if not right_columns:
        entries = tuple(() for _ in range(left.rows))
    return Matrix(field, left.rows, right.cols, entries)


def add(left: Matrix, right: Matrix) -> Matrix:
    if left.shape != right.shape:
        raise ValueError(f"Cannot add {left.shape} and {right.shape}")
    reduce = left.field.reduce
    entries = tuple(tuple(reduce(a + b) for a, b in zip(ra, rb)) for ra, rb in zip(left.entries, right.entries))
    return Matrix(left.field, left.rows, left.cols, entries)


def scale(matrix: Matrix, factor: object) -> Matrix:
    field = matrix.field
    value = field.convert(factor)
    entries = tuple(tuple(field.reduce(value * entry) for entry in row) for row in matrix.entries)
    return Matrix(field, matrix.rows, matrix.cols, entries)


def linear_combination(field: FieldSpec, coefficients: Sequence[Element], matrices: Sequence[Matrix], rows: int, cols: int) -> Matrix:
    result = [[field.zero] * cols for _ in range(rows)]
    for coefficient, matrix in zip(coefficients, matrices):
        if coefficient == 0:
            continue
        for r, row in enumerate(matrix.entries):
            target = result[r]
            for c, value in enumerate(row):
                if value:
                    target[c] = target[c] + coefficient * value
    reduce = field.reduce
    return Matrix(field, rows, cols, tuple(tuple(reduce(value) for value in row) for row in result))


def hstack(field: FieldSpec, blocks: Sequence[Matrix], rows: int) -> Matrix:
    for block in blocks:
        if block.rows != rows:
            raise ValueError("Horizontal blocks must share the row count")
    entries = tuple(tuple(value for block in blocks for value in block.entries[r]) for r in range(rows))
    return Matrix(field, rows, sum(block.cols for block in blocks), entries)


def vstack(field: FieldSpec, blocks: Sequence[Matrix], cols: int) -> Matrix:
    for block in blocks:
        if block.cols != cols:
            raise ValueError("Vertical blocks must share the column count")
    entries = tuple(row for block in blocks for row in block.entries)
    return Matrix(field, len(entries), cols, entries)


def block_diagonal(field: FieldSpec, blocks: Sequence[Matrix]) -> Matrix:
    rows = sum(block.rows for block in blocks)
    cols = sum(block.cols for block in blocks)
    zero = field.zero
    result = [[zero] * cols for _ in range(rows)]
    r0 = c0 = 0
    for block in blocks:
        for r, row in enumerate(block.entries):
            result[r0 + r][c0:c0 + block.cols] = row
        r0 += block.rows
        c0 += block.cols
    return Matrix(field, rows, cols, tuple(tuple(row) for row in result))


def submatrix(matrix: Matrix, row_indices: Sequence[int], col_indices: Sequence[int]) -> Matrix:
    entries = tuple(tuple(matrix.entries[r][c] for c in col_indices) for r in row_indices)
    return Matrix(matrix.field, len(row_indices), len(col_indices), entries)


def row_reduce(field: FieldSpec, rows: Sequence[Sequence[Element]], ncols: int) -> Tuple[List[List[Element]], List[int]]:
    """Reduced row echelon form; returns the nonzero rows and the pivot columns."""
    work = [list(row) for row in rows]
    reduce = field.reduce
    pivots: List[int] = []
    rank = 0
    for col in range(ncols):
        if rank == len(work):
            break
        pivot_row = next((i for i in range(rank, len(work)) if work[i][col] != 0), None)
        if pivot_row is None:
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        inverse = field.inverse(work[rank][col])
        pivot = [reduce(value * inverse) for value in work[rank]]
        work[rank] = pivot
        for i in range(len(work)):
            if i != rank:
                factor = work[i][col]
                if factor != 0:
                    work[i] = [reduce(a - factor * b) if b else a for a, b in zip(work[i], pivot)]
        pivots.append(col)
        rank += 1
    return work[:rank], pivots


def rref(matrix: Matrix) -> Tuple[Matrix, List[int]]:
    reduced, pivots = row_reduce(matrix.field, matrix.entries, matrix.cols)
    return Matrix(matrix.field, len(reduced), matrix.cols, tuple(tuple(row) for row in reduced)), pivots


def rank(matrix: Matrix) -> int:
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    rows = matrix.entries if matrix.rows <= matrix.cols else matrix.transpose.entries
    width = matrix.cols if matrix.rows <= matrix.cols else matrix.rows
    _, pivots = row_reduce(matrix.field, rows, width)
    return len(pivots)


def kernel_basis(matrix: Matrix) -> Matrix:
    """Columns of the result span the null space of ``matrix``."""
    field = matrix.field
    reduced, pivots = row_reduce(field, matrix.entries, matrix.cols)
    pivot_set = set(pivots)
    free = [c for c in range(matrix.cols) if c not in pivot_set]
    basis: List[Vector] = []
    for free_col in free:
        vector = [field.zero] * matrix.cols
        vector[free_col] = field.one
        for row, pivot_col in zip(reduced, pivots):
            vector[pivot_col] = field.reduce(-row[free_col])
        basis.append(tuple(vector))
    return from_columns(field, basis, matrix.cols)


def solve(matrix: Matrix, rhs: Sequence[Element]) -> Optional[Vector]:
    if len(rhs) != matrix.rows:
        raise ValueError(f"Right-hand side has length {len(rhs)}, expected {matrix.rows}")
    field = matrix.field
    augmented = [list(row) + [value] for row, value in zip(matrix.entries, rhs)]
    reduced, pivots = row_reduce(field, augmented, matrix.cols + 1)
    if pivots and pivots[-1] == matrix.cols:
        return None
    solution = [field.zero] * matrix.cols
    for row, pivot_col in zip(reduced, pivots):
        solution[pivot_col] = row[matrix.cols]
    return tuple(solution)


def invert(matrix: Matrix) -> Optional[Matrix]:
    if not matrix.is_square:
        raise ValueError(f"Only square matrices can be inverted, got {matrix.rows}x{matrix.cols}")
    field = matrix.field
    size = matrix.rows
    identity = identity_matrix(field, size)
    augmented = [list(row) + list(unit) for row, unit in zip(matrix.entries, identity.entries)]
    reduced, pivots = row_reduce(field, augmented, 2 * size)
    if pivots[:size] != list(range(size)):
        return None
    return Matrix(field, size, size, tuple(tuple(row[size:]) for row in reduced))


def is_invertible(matrix: Matrix) -> bool:
    return matrix.is_square and rank(matrix) == matrix.rows


def pivot_columns(matrix: Matrix) -> List[int]:
    """Indices of a maximal set of independent columns, chosen left to right."""
    _, pivots = row_reduce(matrix.field, matrix.entries, matrix.cols)
    return pivots


def independent_vectors(field: FieldSpec, vectors: Sequence[Sequence[Element]], length: int) -> List[int]:
    if not vectors:
        return []
    return pivot_columns(from_columns(field, vectors, length))


def span_basis(field: FieldSpec, vectors: Sequence[Sequence[Element]], length: int) -> List[Vector]:
    reduced, _ = row_reduce(field, vectors, length)
    return [tuple(row) for row in reduced]


class Subspace:
    """A subspace of k^n with a fixed basis and cached coordinate extraction."""

    def __init__(self, field: FieldSpec, ambient: int, basis: Sequence[Sequence[Element]]) -> None:
        self.field = field
        self.ambient = ambient
        independent = independent_vectors(field, basis, ambient)
        self.basis: Tuple[Vector, ...] = tuple(tuple(basis[i]) for i in independent)
        self._transform = self._build_transform()

    @classmethod
    def spanned_by(cls, field: FieldSpec, ambient: int, vectors: Iterable[Sequence[Element]]) -> "Subspace":
        return cls(field, ambient, [tuple(v) for v in vectors])

    @classmethod
    def whole(cls, field: FieldSpec, ambient: int) -> "Subspace":
        return cls(field, ambient, identity_matrix(field, ambient).columns())

    @property
    def dim(self) -> int:
        return len(self.basis)

    def basis_matrix(self) -> Matrix:
        return from_columns(self.field, self.basis, self.ambient)

    def _build_transform(self) -> List[List[Element]]:
        field = self.field
        n, k = self.ambient, len(self.basis)
        zero, one = field.zero, field.one
        augmented = [
            [self.basis[j][r] for j in range(k)] + [one if c == r else zero for c in range(n)]
            for r in range(n)
        ]
        reduced, _ = row_reduce(field, augmented, k + n)
        # E with E.B = [I; 0]; the first k rows give coordinates.
        return [row[k:] for row in reduced]

    def _transformed(self, vector: Sequence[Element]) -> List[Element]:
        reduce = self.field.reduce
        zero = self.field.zero
        return [reduce(sum((a * b for a, b in zip(row, vector) if a and b), zero)) for row in self._transform]

    def coordinates(self, vector: Sequence[Element]) -> Optional[Vector]:
        if len(vector) != self.ambient:
            raise ValueError(f"Vector of length {len(vector)} is not in a space of dimension {self.ambient}")
        transformed = self._transformed(vector)
        k = len(self.basis)
        if any(value != 0 for value in transformed[k:]):
            return None
        return tuple(transformed[:k])

    def contains(self, vector: Sequence[Element]) -> bool:
        return self.coordinates(vector) is not None

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(vector) for vector in other.basis)

    def complement(self) -> List[Vector]:
        """Standard basis vectors completing this basis to a basis of k^n."""
        identity = identity_matrix(self.field, self.ambient).columns()
        vectors = list(self.basis) + identity
        chosen = independent_vectors(self.field, vectors, self.ambient)
        return [vectors[i] for i in chosen if i >= len(self.basis)]

    def sum(self, other: "Subspace") -> "Subspace":
        return Subspace(self.field, self.ambient, list(self.basis) + list(other.basis))

    def intersection(self, other: "Subspace") -> "Subspace":
        field = self.field
        if not self.basis or not other.basis:
            return Subspace(field, self.ambient, [])
        stacked = from_columns(field, list(self.basis) + [tuple(field.reduce(-x) for x in v) for v in other.basis], self.ambient)
        kernel = kernel_basis(stacked)
        k = len(self.basis)
        vectors = []
        for coefficients in kernel.columns():
            vector = [field.zero] * self.ambient
            for coefficient, basis_vector in zip(coefficients[:k], self.basis):
                if coefficient:
                    vector = [field.reduce(a + coefficient * b) for a, b in zip(vector, basis_vector)]
            vectors.append(tuple(vector))
        return Subspace(field, self.ambient, vectors)


def column_space(matrix: Matrix) -> Subspace:
    return Subspace(matrix.field, matrix.rows, matrix.columns())


def vector_add(field: FieldSpec, left: Sequence[Element], right: Sequence[Element]) -> Vector:
    return tuple(field.reduce(a + b) for a, b in zip(left, right))


def vector_scale(field: FieldSpec, factor: Element, vector: Sequence[Element]) -> Vector:
    return tuple(field.reduce(factor * value) for value in vector)


def vector_combination(field: FieldSpec, coefficients: Sequence[Element], vectors: Sequence[Sequence[Element]], length: int) -> Vector:
    result = [field.zero] * length
    for coefficient, vector in zip(coefficients, vectors):
        if coefficient == 0:
            continue
        for index, value in enumerate(vector):
            if value:
                result[index] = result[index] + coefficient * value
    return tuple(field.reduce(value) for value in result)


def unit_vector(field: FieldSpec, length: int, index: int) -> Vector:
    return tuple(field.one if i == index else field.zero for i in range(length))


def matrix_power(matrix: Matrix, exponent: int) -> Matrix:
    if not matrix.is_square:
        raise ValueError("Only square matrices have powers")
    result = identity_matrix(matrix.field, matrix.rows)
    base = matrix
    while exponent:
        if exponent & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        exponent >>= 1
    return result
