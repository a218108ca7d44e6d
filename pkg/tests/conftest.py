from itertools import permutations
from pathlib import Path
from typing import Callable, Tuple

import pytest

from stable_tau.algebra import Algebra, from_bound_quiver
from stable_tau.common import reseed
from stable_tau.config import DEFAULT_SEED
from stable_tau.documents import build_action, build_algebra, load_document
from stable_tau.group_action import GroupAction
from stable_tau.groups import FiniteGroup, group_from_table
from stable_tau.linalg import FieldSpec
from stable_tau.mutation import ExchangeQuiver, enumerate_pairs
from stable_tau.quiver import Arrow, QuiverPresentation
from stable_tau.skew import SkewAlgebra, skew_algebra


INPUTS = Path(__file__).resolve().parent.parent / "inputs"


@pytest.fixture(autouse=True)
def fixed_seed() -> None:
    reseed(DEFAULT_SEED)


@pytest.fixture
def inputs_path() -> Path:
    return INPUTS


@pytest.fixture(scope="session")
def q() -> FieldSpec:
    return FieldSpec.rationals()


@pytest.fixture(scope="session")
def a2() -> Algebra:
    """1 -> 2."""
    return from_bound_quiver(QuiverPresentation(("1", "2"), (Arrow("a", "1", "2"),)))


@pytest.fixture(scope="session")
def a2_quiver(a2: Algebra) -> ExchangeQuiver:
    return enumerate_pairs(a2)


@pytest.fixture(scope="session")
def s3() -> FiniteGroup:
    """Permutations of three points, generated by a transposition and a 3-cycle."""
    elements = list(permutations(range(3)))
    position = {element: index for index, element in enumerate(elements)}
    table = [[position[tuple(a[b[i]] for i in range(3))] for b in elements] for a in elements]
    return group_from_table(table, [position[(1, 0, 2)], position[(1, 2, 0)]])


def _load(name: str) -> Tuple[Algebra, GroupAction]:
    reseed(DEFAULT_SEED)
    document = load_document(INPUTS / name)
    algebra = build_algebra(document)
    return algebra, build_action(document, algebra)


@pytest.fixture
def load() -> Callable[[str], Tuple[Algebra, GroupAction]]:
    return _load


@pytest.fixture(scope="session")
def two_arrows() -> Tuple[Algebra, GroupAction]:
    """1 -> 2 and 1 -> 2' with the arrows swapped by Z/2."""
    return _load("two_arrows_swap.json")


@pytest.fixture(scope="session")
def two_arrows_quiver(two_arrows: Tuple[Algebra, GroupAction]) -> ExchangeQuiver:
    reseed(DEFAULT_SEED)
    return enumerate_pairs(two_arrows[0])


@pytest.fixture(scope="session")
def two_arrows_skew(two_arrows: Tuple[Algebra, GroupAction]) -> SkewAlgebra:
    reseed(DEFAULT_SEED)
    return skew_algebra(two_arrows[1])
