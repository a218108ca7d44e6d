import pytest

from stable_tau.algebra import from_bound_quiver, gabriel_quiver
from stable_tau.common import InputError, RefusedError
from stable_tau.config import CLASS_TILTING
from stable_tau.group_action import action_from_generators, trivial_action
from stable_tau.groups import cyclic_product
from stable_tau.linalg import FieldSpec, identity_matrix
from stable_tau.modules import (
    decompose,
    direct_sum,
    is_isomorphic,
    projective,
    regular_module,
    top,
    zero_module,
)
from stable_tau.quiver import Arrow, QuiverPresentation
from stable_tau.skew import (
    character_group,
    chi_action,
    induce,
    morita_restrict,
    require_characters,
    restrict,
    skew_algebra,
    verify_bijection,
    verify_induction_stability,
    verify_restriction_intertwiners,
)


def test_skew_algebra_shape(two_arrows_skew):
    skew = two_arrows_skew
    assert skew.algebra.dim == 10
    assert skew.algebra.vertex_count == 4
    assert sorted(skew.algebra.vertex_label(i) for i in range(4)) == ["1", "1'", "2", "2'"]


def test_basic_reduction_is_one_sink_with_two_sources(two_arrows_skew):
    basic = two_arrows_skew.reduction.algebra
    assert basic.dim == 5
    assert basic.vertex_count == 3
    shape = gabriel_quiver(basic)
    assert len(shape.arrows) == 2
    assert len({arrow.target for arrow in shape.arrows}) == 1
    assert len({arrow.source for arrow in shape.arrows}) == 2


def test_induction_of_simples(two_arrows, two_arrows_skew):
    algebra, _ = two_arrows
    skew = two_arrows_skew
    assert induce(skew, zero_module(algebra)).dim == 0
    s1, s2, s2_prime = (top(projective(algebra, index))[0] for index in range(3))
    first = decompose(induce(skew, s1))
    assert len(first) == 2
    assert not is_isomorphic(first[0], first[1])
    assert is_isomorphic(induce(skew, s2), induce(skew, s2_prime))
    assert morita_restrict(skew, induce(skew, s2)).dim == 1


def test_restriction_of_induction(two_arrows, two_arrows_skew):
    algebra, _ = two_arrows
    skew = two_arrows_skew
    s1, s2, s2_prime = (top(projective(algebra, index))[0] for index in range(3))
    assert is_isomorphic(restrict(skew, induce(skew, s1)), direct_sum([s1, s1], algebra)[0])
    assert is_isomorphic(restrict(skew, induce(skew, s2)), direct_sum([s2, s2_prime], algebra)[0])


def test_character_groups(q):
    assert len(character_group(cyclic_product([2]), q)) == 2
    rationals_three = character_group(cyclic_product([3]), q)
    assert len(rationals_three) == 1
    assert not rationals_three.complete
    seven = character_group(cyclic_product([3]), FieldSpec.prime(7))
    assert len(seven) == 3
    assert seven.complete
    assert seven.as_group.order == 3


def test_chi_action_is_multiplicative(two_arrows_skew):
    skew = two_arrows_skew
    trivial, sign = character_group(skew.group, skew.base.field).characters
    identity = identity_matrix(skew.base.field, skew.algebra.dim)
    assert chi_action(skew, trivial) == identity
    assert chi_action(skew, sign) != identity
    assert chi_action(skew, sign) @ chi_action(skew, sign) == identity


def test_intertwiners(two_arrows, two_arrows_skew):
    algebra, _ = two_arrows
    skew = two_arrows_skew
    characters = character_group(skew.group, algebra.field)
    stable = direct_sum([projective(algebra, 1), projective(algebra, 2)], algebra)[0]
    assert verify_induction_stability(skew, stable, characters)
    assert verify_induction_stability(skew, regular_module(algebra), characters)
    assert verify_restriction_intertwiners(skew, regular_module(skew.algebra))


def test_induction_stability_needs_a_stable_module(two_arrows, two_arrows_skew):
    algebra, _ = two_arrows
    characters = character_group(two_arrows_skew.group, algebra.field)
    with pytest.raises(InputError, match="G-stable"):
        verify_induction_stability(two_arrows_skew, projective(algebra, 1), characters)


def test_stable_pairs_match_stable_pairs(two_arrows):
    _, action = two_arrows
    report = verify_bijection(action)
    assert len(report.base_quiver) == 14
    assert len(report.basic_quiver) == 14
    assert len(report.base_stable) == 6
    assert len(report.basic_stable) == 6
    assert report.into_stable
    assert report.bijective
    assert report.tilting_preserved
    tilting = [t for t in report.matches.values() if report.basic_quiver.annotations[t].classification == CLASS_TILTING]
    assert len(tilting) >= 3


def test_missing_roots_of_unity_are_refused_with_a_hint(q):
    with pytest.raises(RefusedError, match="Fp:7"):
        require_characters(cyclic_product([3]), q)


def test_non_abelian_groups_are_refused(q, s3):
    with pytest.raises(RefusedError, match="abelian"):
        require_characters(s3, q)


def test_group_order_must_be_invertible():
    f2 = FieldSpec.prime(2)
    algebra = from_bound_quiver(QuiverPresentation(("1", "2"), (Arrow("a", "1", "2"),)), f2)
    action = action_from_generators(algebra, cyclic_product([2]), [identity_matrix(f2, algebra.dim)])
    with pytest.raises(InputError):
        skew_algebra(action)


def test_trivial_group_gives_back_the_algebra(a2):
    skew = skew_algebra(trivial_action(a2))
    assert skew.algebra.dim == a2.dim
    assert skew.reduction.is_trivial
    assert is_isomorphic(restrict(skew, induce(skew, projective(a2, 0))), projective(a2, 0))
