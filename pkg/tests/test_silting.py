import pytest

from stable_tau import silting
from stable_tau.common import ResourceAbort
from stable_tau.linalg import zero_matrix
from stable_tau.modules import ModuleMap, is_isomorphic, projective
from stable_tau.silting import (
    TwoTermComplex,
    chain_map_basis,
    h0,
    h_minus_one,
    hom_k_shift,
    homotopy_equivalent,
    is_null_homotopic,
    is_presilting,
    pair_to_silting,
)


def test_every_pair_gives_a_presilting_complex(a2_quiver):
    for pair in a2_quiver.vertices:
        complex_ = pair_to_silting(pair)
        assert is_presilting(complex_)
        assert is_isomorphic(h0(complex_), pair.t_module)


def test_zero_differential_is_not_presilting(a2):
    p1 = projective(a2, 0)
    complex_ = TwoTermComplex(ModuleMap(p1, p1, zero_matrix(a2.field, p1.dim, p1.dim)))
    assert hom_k_shift(complex_) == 1
    assert not is_presilting(complex_)
    assert is_isomorphic(h_minus_one(complex_), p1)


def test_homotopy_equivalence_separates_pairs(a2_quiver):
    complexes = [pair_to_silting(pair) for pair in a2_quiver.vertices]
    for first_position, first in enumerate(complexes):
        for second_position, second in enumerate(complexes):
            assert homotopy_equivalent(first, second) == (first_position == second_position)


def test_identity_chain_map_is_not_null_homotopic(a2_quiver):
    complex_ = pair_to_silting(a2_quiver.vertices[0])
    basis = chain_map_basis(complex_, complex_)
    assert basis
    assert not all(is_null_homotopic(chain) for chain in basis)


def test_exhausted_homotopy_search_aborts(a2_quiver, monkeypatch):
    monkeypatch.setattr(silting, "ISO_RANDOM_TRIALS", 0)
    complex_ = pair_to_silting(a2_quiver.vertices[0])
    with pytest.raises(ResourceAbort):
        homotopy_equivalent(complex_, complex_)
