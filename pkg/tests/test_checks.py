from dataclasses import replace

from stable_tau.checks import (
    base_suite,
    block_idempotents,
    check_fac_ordering,
    check_product_oracle,
    skew_suite,
    swapped_block,
)
from stable_tau.config import DEFAULT_MAX_VERTICES
from stable_tau.group_action import stable_filter, trivial_action
from stable_tau.mutation import ExchangeArrow, enumerate_pairs
from stable_tau.skew import verify_bijection


def failures(results):
    return [(result.name, result.detail) for result in results if not result.passed]


def test_base_suite_passes_on_a2(a2, a2_quiver):
    action = trivial_action(a2)
    stable_filter(a2_quiver, action)
    assert failures(base_suite(a2_quiver, action)) == []


def test_base_suite_passes_under_the_swap(two_arrows, two_arrows_quiver):
    _, action = two_arrows
    stable_filter(two_arrows_quiver, action)
    assert failures(base_suite(two_arrows_quiver, action)) == []


def test_skew_suite_passes_under_the_swap(two_arrows):
    _, action = two_arrows
    report = verify_bijection(action)
    results = skew_suite(report)
    assert len(results) == 13
    assert failures(results) == []


def test_blocks_of_a_connected_algebra(two_arrows):
    algebra, action = two_arrows
    assert block_idempotents(algebra) == [[0, 1, 2]]
    assert swapped_block(action) is None


def test_product_of_two_swapped_blocks(load):
    algebra, action = load("a2_squared_swap.json")
    assert block_idempotents(algebra) == [[0, 1], [2, 3]]
    assert swapped_block(action) == [0, 1]
    quiver = enumerate_pairs(algebra)
    stable = stable_filter(quiver, action)
    assert len(quiver) == 25
    assert len(stable) == 5
    result = check_product_oracle(action, quiver, stable, DEFAULT_MAX_VERTICES)
    assert result is not None
    assert result.passed


def test_arrows_shrink_the_torsion_class(a2_quiver, two_arrows_quiver):
    for quiver in (a2_quiver, two_arrows_quiver):
        result = check_fac_ordering(quiver)
        assert result.passed, result.detail
        assert result.detail == f"{len(quiver.arrows)} cases"


def test_flipped_arrows_fail_the_fac_ordering(two_arrows_quiver):
    flipped = replace(
        two_arrows_quiver,
        arrows=[ExchangeArrow(arrow.target, arrow.source, 0) for arrow in two_arrows_quiver.arrows],
    )
    assert not check_fac_ordering(flipped).passed


def test_base_suite_includes_the_fac_ordering(a2, a2_quiver):
    action = trivial_action(a2)
    stable_filter(a2_quiver, action)
    names = [result.name for result in base_suite(a2_quiver, action)]
    assert "arrows shrink the torsion class" in names
    assert len(names) == 13
