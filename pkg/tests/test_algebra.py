from fractions import Fraction

import pytest

from stable_tau.algebra import (
    Algebra,
    automorphism_from_quiver_map,
    basic_reduction,
    corner_algebra,
    from_bound_quiver,
    gabriel_quiver,
    is_automorphism,
    is_split_basic,
)
from stable_tau.common import InputError, NotSplitError
from stable_tau.linalg import FieldSpec, identity_matrix
from stable_tau.quiver import Arrow, QuiverPresentation, Relation
from stable_tau.skew import skew_algebra


def test_a2_basis(a2):
    assert a2.dim == 3
    assert a2.vertex_count == 2
    assert a2.rad.dim == 1
    assert is_split_basic(a2)


def test_unit_and_idempotents(a2):
    for e in a2.idempotents:
        assert a2.multiply(e, e) == e
        assert a2.multiply(a2.unit, e) == e
    first, second = a2.idempotents
    assert a2.is_zero_element(a2.multiply(first, second))


def test_arrow_sits_between_its_endpoints(a2):
    arrow = a2.basis_vector(a2.labels.index("a"))
    source, target = a2.idempotents
    assert a2.product(target, arrow, source) == arrow
    assert a2.is_zero_element(a2.multiply(arrow, target))


def test_relations_cut_the_dimension():
    arrows = (Arrow("a", "1", "2"), Arrow("b", "2", "3"))
    free = from_bound_quiver(QuiverPresentation(("1", "2", "3"), arrows))
    bound = from_bound_quiver(
        QuiverPresentation(("1", "2", "3"), arrows, (Relation(((Fraction(1), ("a", "b")),)),))
    )
    assert free.dim == 6
    assert bound.dim == 5


def test_cycle_without_relations_is_rejected():
    loop = QuiverPresentation(("1",), (Arrow("x", "1", "1"),), nilpotency_bound=4)
    with pytest.raises(InputError):
        from_bound_quiver(loop)


def test_two_arrows_dimension(two_arrows):
    algebra, _ = two_arrows
    assert algebra.dim == 5
    assert algebra.vertex_count == 3


def test_radical_over_small_prime():
    algebra = from_bound_quiver(QuiverPresentation(("1", "2"), (Arrow("a", "1", "2"),)), FieldSpec.prime(2))
    assert algebra.rad.dim == 1


def test_opposite_reverses_products(a2):
    opposite = a2.opposite
    x, y = a2.basis_vector(0), a2.basis_vector(2)
    assert opposite.multiply(x, y) == a2.multiply(y, x)
    assert opposite.opposite is a2


def test_quiver_map_automorphism(two_arrows):
    algebra, _ = two_arrows
    swap = automorphism_from_quiver_map(algebra, {"2": "2'", "2'": "2"}, {"a": "b", "b": "a"})
    assert is_automorphism(algebra, swap)
    assert swap @ swap == identity_matrix(algebra.field, algebra.dim)


def test_quiver_map_rejects_non_automorphism(a2):
    with pytest.raises(InputError):
        automorphism_from_quiver_map(a2, {"1": "2", "2": "1"}, {})


def test_gabriel_quiver_recovers_the_arrows(two_arrows):
    algebra, _ = two_arrows
    shape = gabriel_quiver(algebra)
    assert sorted((arrow.source, arrow.target) for arrow in shape.arrows) == [("1", "2"), ("1", "2'")]


def test_corner_algebra_at_one_vertex(two_arrows):
    algebra, _ = two_arrows
    e = algebra.idempotents[0]
    corner, embedding = corner_algebra(algebra, e)
    assert corner.dim == 1
    assert embedding.cols == 1


def test_basic_algebra_reduces_to_itself(a2):
    reduction = basic_reduction(a2)
    assert reduction.is_trivial
    assert reduction.algebra is a2


DOCUMENTS = ["a2.json", "two_arrows_swap.json", "a2_squared_swap.json", "three_arrows_rotation_f7.json"]


@pytest.mark.parametrize("name", DOCUMENTS)
def test_radical_is_nilpotent(load, name):
    algebra, _ = load(name)
    rad = algebra.rad.basis
    power = list(rad)
    for _ in range(algebra.dim):
        if not power:
            break
        power = list(algebra.span([algebra.multiply(x, y) for x in power for y in rad]).basis)
    assert power == []


@pytest.mark.parametrize("name", DOCUMENTS[1:])
def test_basic_reduction_is_idempotent(load, name):
    _, action = load(name)
    reduction = skew_algebra(action).reduction
    assert not reduction.is_trivial
    again = basic_reduction(reduction.algebra)
    assert again.is_trivial
    assert is_split_basic(again.algebra)


def gaussian_rationals():
    """Q(i) with basis 1, i: semisimple with a two-dimensional top."""
    q = FieldSpec.rationals()
    one, zero = Fraction(1), Fraction(0)
    structure = (((one, zero), (zero, one)), ((zero, one), (-one, zero)))
    return Algebra(q, ("1", "i"), structure, (one, zero), ((one, zero),), ("1",))


def test_basic_reduction_rejects_a_non_split_algebra():
    algebra = gaussian_rationals()
    assert algebra.rad.dim == 0
    assert not is_split_basic(algebra)
    with pytest.raises(NotSplitError):
        basic_reduction(algebra)
