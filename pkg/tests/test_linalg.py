import random
from fractions import Fraction

import pytest

from stable_tau.linalg import (
    FieldSpec,
    Subspace,
    from_rows,
    identity_matrix,
    invert,
    kernel_basis,
    matrix_power,
    rank,
    solve,
    zero_matrix,
)


def test_rational_rank_and_kernel(q):
    matrix = from_rows(q, [[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert rank(matrix) == 2
    kernel = kernel_basis(matrix)
    assert kernel.cols == 1
    assert (matrix @ kernel).is_zero()


def test_fractions_stay_exact(q):
    matrix = from_rows(q, [["1/3", 0], [0, 3]])
    inverse = invert(matrix)
    assert inverse is not None
    assert inverse[0, 0] == Fraction(3)
    assert inverse[1, 1] == Fraction(1, 3)
    assert matrix @ inverse == identity_matrix(q, 2)


def test_prime_field_reduces_entries():
    f5 = FieldSpec.prime(5)
    matrix = from_rows(f5, [[2, 0], [0, 3]])
    inverse = invert(matrix)
    assert inverse is not None
    assert inverse[0, 0] == 3
    assert inverse[1, 1] == 2
    # 5 = 0 over F_5, so this matrix drops rank.
    assert rank(from_rows(f5, [[1, 1], [1, 6]])) == 1


def test_solve_consistent_and_inconsistent(q):
    matrix = from_rows(q, [[1, 1], [1, -1]])
    assert solve(matrix, (Fraction(2), Fraction(0))) == (Fraction(1), Fraction(1))
    singular = from_rows(q, [[1, 1], [2, 2]])
    assert solve(singular, (Fraction(1), Fraction(3))) is None


def test_singular_matrix_has_no_inverse(q):
    assert invert(from_rows(q, [[1, 2], [2, 4]])) is None
    with pytest.raises(ValueError):
        invert(zero_matrix(q, 2, 3))


def test_subspace_coordinates_and_complement(q):
    space = Subspace(q, 3, [(1, 1, 0), (2, 2, 0), (0, 1, 1)])
    assert space.dim == 2
    assert space.coordinates((Fraction(1), Fraction(2), Fraction(1))) == (Fraction(1), Fraction(1))
    assert space.coordinates((Fraction(1), Fraction(0), Fraction(0))) is None
    assert len(space.complement()) == 1


def test_subspace_intersection(q):
    first = Subspace(q, 3, [(1, 0, 0), (0, 1, 0)])
    second = Subspace(q, 3, [(0, 1, 0), (0, 0, 1)])
    meet = first.intersection(second)
    assert meet.dim == 1
    assert meet.contains((Fraction(0), Fraction(5), Fraction(0)))


def test_nilpotent_power(q):
    shift = from_rows(q, [[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    assert not matrix_power(shift, 2).is_zero()
    assert matrix_power(shift, 3).is_zero()


@pytest.mark.parametrize("raw", ["Fp:4", "banana", "Fp:"])
def test_field_parse_rejects_bad_specs(raw):
    with pytest.raises(ValueError):
        FieldSpec.parse(raw)


def test_field_parse_accepts_known_specs():
    assert FieldSpec.parse("Q") == FieldSpec.rationals()
    assert FieldSpec.parse("Fp:7") == FieldSpec.prime(7)
    assert FieldSpec.parse("F7").label == "Fp:7"


def random_matrix(field, rng, rows, cols):
    return from_rows(field, [[field.random_element(rng) for _ in range(cols)] for _ in range(rows)], cols)


@pytest.mark.parametrize("spec", ["Q", "Fp:2", "Fp:7"])
@pytest.mark.parametrize("seed", range(6))
def test_rank_plus_nullity_is_the_column_count(spec, seed):
    field = FieldSpec.parse(spec)
    rng = random.Random(seed)
    rows, inner, cols = rng.randint(1, 6), rng.randint(1, 6), rng.randint(1, 6)
    matrix = random_matrix(field, rng, rows, inner) @ random_matrix(field, rng, inner, cols)
    null_space = kernel_basis(matrix)
    assert rank(matrix) + null_space.cols == cols
    assert rank(matrix) <= min(rows, inner, cols)
    assert (matrix @ null_space).is_zero()
