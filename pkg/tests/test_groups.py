import pytest

from stable_tau.common import InputError
from stable_tau.groups import cyclic_product, group_from_table, trivial_group


def test_cyclic_product_facts():
    group = cyclic_product([2, 3])
    assert group.order == 6
    assert group.is_abelian
    assert group.exponent == 6
    assert group.commutator_quotient_order == 6
    assert group.label(group.identity) == "1"
    assert [group.element_order(g) for g in group.generators] == [2, 3]


def test_trivial_group():
    group = trivial_group()
    assert group.order == 1
    assert group.generators == ()
    assert group.commutator_quotient_order == 1


def test_symmetric_group_is_solvable_not_abelian(s3):
    group = s3
    assert not group.is_abelian
    assert group.is_solvable
    assert group.commutator_quotient_order == 2
    assert group.exponent == 6


def test_inverse_and_cayley_order():
    group = cyclic_product([4])
    generator = group.generators[0]
    assert group.multiply(generator, group.inverse(generator)) == group.identity
    assert len(group.cayley_order) == 4
    for element, position, predecessor in group.cayley_order[1:]:
        assert element == group.multiply(group.generators[position], predecessor)


def test_bad_tables_are_rejected():
    with pytest.raises(InputError):
        group_from_table([[0, 1], [0, 1]], [1])
    with pytest.raises(InputError):
        group_from_table([[0, 1], [1, 0]], [0])
    with pytest.raises(InputError):
        cyclic_product([0])
