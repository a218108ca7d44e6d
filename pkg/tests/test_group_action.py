import pytest

from stable_tau.common import InputError
from stable_tau.config import CLASS_TILTING
from stable_tau.documents import build_action, build_algebra, load_document
from stable_tau.group_action import (
    action_from_generators,
    is_g_stable_complex,
    is_g_stable_module,
    is_g_stable_torsion,
    stable_filter,
    trivial_action,
    twist_pair,
)
from stable_tau.groups import cyclic_product
from stable_tau.modules import direct_sum, is_isomorphic, projective
from stable_tau.mutation import distinct_summands
from stable_tau.silting import pair_to_silting


def test_swap_permutes_the_projectives(two_arrows):
    algebra, action = two_arrows
    swap = action.generators[0]
    assert action.permutations[action.group.identity] == (0, 1, 2)
    assert action.permutations[swap] == (0, 2, 1)
    assert is_isomorphic(action.twist(projective(algebra, 1), swap), projective(algebra, 2))


def test_module_stability(two_arrows):
    algebra, action = two_arrows
    assert is_g_stable_module(projective(algebra, 0), action)
    assert not is_g_stable_module(projective(algebra, 1), action)
    both = direct_sum([projective(algebra, 1), projective(algebra, 2)], algebra)[0]
    assert is_g_stable_module(both, action)


def test_six_stable_pairs(two_arrows, two_arrows_quiver):
    _, action = two_arrows
    stable = stable_filter(two_arrows_quiver, action)
    assert len(stable) == 6
    assert two_arrows_quiver.source_index in stable
    assert two_arrows_quiver.sink_index in stable
    tilting = [p for p in stable if two_arrows_quiver.annotations[p].classification == CLASS_TILTING]
    assert len(tilting) == 3


def test_stability_agrees_across_pairs_torsion_and_complexes(two_arrows, two_arrows_quiver):
    _, action = two_arrows
    stable = set(stable_filter(two_arrows_quiver, action))
    summands = distinct_summands(two_arrows_quiver)
    for position, pair in enumerate(two_arrows_quiver.vertices):
        expected = position in stable
        assert is_g_stable_complex(pair_to_silting(pair), action) == expected
        assert is_g_stable_torsion(pair.t_module, action, summands) == expected


def test_twisting_permutes_the_exchange_quiver(two_arrows, two_arrows_quiver):
    _, action = two_arrows
    swap = action.generators[0]
    for position, pair in enumerate(two_arrows_quiver.vertices):
        image = two_arrows_quiver.find(twist_pair(pair, action, swap))
        assert image is not None
        back = twist_pair(two_arrows_quiver.vertices[image], action, swap)
        assert two_arrows_quiver.find(back) == position


def test_trivial_action_makes_everything_stable(a2, a2_quiver):
    assert stable_filter(a2_quiver, trivial_action(a2)) == list(range(5))


def test_vertex_swap_against_the_arrow_is_rejected(inputs_path):
    document = load_document(inputs_path / "a2_invalid_swap.json")
    algebra = build_algebra(document)
    with pytest.raises(InputError):
        build_action(document, algebra)


def test_generator_of_the_wrong_order_is_rejected(two_arrows):
    algebra, action = two_arrows
    swap = action.maps[action.generators[0]]
    with pytest.raises(InputError):
        action_from_generators(algebra, cyclic_product([3]), [swap])
