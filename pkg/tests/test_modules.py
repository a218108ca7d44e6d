import pytest

from stable_tau.linalg import Subspace
from stable_tau.modules import (
    annihilator,
    class_id,
    cokernel,
    decompose,
    direct_sum,
    endomorphism_algebra,
    fac_contains,
    find_isomorphism,
    hom_dimension,
    is_faithful,
    is_indecomposable,
    is_isomorphic,
    is_projective,
    is_sincere,
    kernel,
    module_label,
    projective,
    projective_cover,
    projective_index,
    quotient,
    radical_layers,
    radical_submodule,
    regular_module,
    top,
    validate_representation,
    zero_module,
)


def simples(algebra):
    return [top(projective(algebra, index))[0] for index in range(algebra.vertex_count)]


def test_a2_projectives(a2):
    p1, p2 = projective(a2, 0), projective(a2, 1)
    assert p1.dim_vector == (1, 1)
    assert p2.dim_vector == (0, 1)
    assert module_label(p1) == "1 / 2"
    assert module_label(p2) == "2"
    validate_representation(p1)


def test_regular_module_splits_into_projectives(a2):
    parts = decompose(regular_module(a2))
    assert [part.dim_vector for part in parts] == [(0, 1), (1, 1)]
    assert all(is_projective(part) for part in parts)


def test_hom_dimensions(a2):
    p1, p2 = projective(a2, 0), projective(a2, 1)
    s1, s2 = simples(a2)
    assert hom_dimension(p2, p1) == 1
    assert hom_dimension(p1, p2) == 0
    assert hom_dimension(p1, s1) == 1
    assert hom_dimension(s1, p1) == 0
    assert hom_dimension(s2, s2) == 1


def test_projective_cover_of_a_simple(a2):
    p1 = projective(a2, 0)
    s1 = simples(a2)[0]
    cover = projective_cover(s1)
    assert cover.source.projective_indices == (0,)
    assert cover.is_surjective()
    assert find_isomorphism(cover.source, p1) is not None
    assert is_isomorphic(cokernel(cover)[0], zero_module(a2))
    assert projective_index(p1) == 0
    assert projective_index(s1) is None


def test_decomposition_recovers_summands(two_arrows):
    algebra, _ = two_arrows
    p1, p2, p3 = (projective(algebra, index) for index in range(3))
    total = direct_sum([p3, p1, p2, p1])[0]
    parts = decompose(total)
    assert len(parts) == 4
    assert sum(1 for part in parts if is_isomorphic(part, p1)) == 2
    assert all(is_indecomposable(part) for part in parts)


def test_isomorphism_ignores_basis_order(two_arrows):
    algebra, _ = two_arrows
    s = simples(algebra)
    first = direct_sum([s[1], s[2]])[0]
    second = direct_sum([s[2], s[1]])[0]
    assert is_isomorphic(first, second)
    assert class_id(first) == class_id(second)
    assert not is_isomorphic(s[1], s[2])


def test_radical_layers_of_projective_source(two_arrows):
    algebra, _ = two_arrows
    p1 = projective(algebra, 0)
    assert radical_layers(p1) == [(1, 0, 0), (0, 1, 1)]
    assert module_label(p1) == "1 / 2 2'"


def test_local_endomorphisms(two_arrows):
    algebra, _ = two_arrows
    endomorphisms, maps = endomorphism_algebra(projective(algebra, 0))
    assert endomorphisms.dim == 1
    assert len(maps) == 1


def test_fac_sincere_faithful(a2):
    p1 = projective(a2, 0)
    s1, s2 = simples(a2)
    assert fac_contains(p1, s1)
    assert not fac_contains(p1, s2)
    assert is_sincere(p1)
    assert not is_sincere(s1)
    assert is_faithful(p1)
    assert not is_faithful(direct_sum([s1, s2])[0])


SAMPLE_COUNT = 7


def sample_modules(algebra):
    """Projectives, simples and the regular module."""
    projectives = [projective(algebra, index) for index in range(algebra.vertex_count)]
    return projectives + simples(algebra) + [regular_module(algebra)]


def small_quotients(module):
    """M / rad M and M / rad^2 M."""
    algebra = module.algebra
    rad = algebra.rad.basis
    square = [column for x in rad for y in rad for column in module.act(algebra.multiply(x, y)).columns()]
    return [top(module)[0], quotient(module, square)[0]]


@pytest.mark.parametrize("index", range(SAMPLE_COUNT))
def test_fac_is_closed_under_quotients(two_arrows, index):
    algebra, _ = two_arrows
    modules = sample_modules(algebra)
    module = modules[index]
    for generator in modules:
        if fac_contains(generator, module):
            assert all(fac_contains(generator, q) for q in small_quotients(module))
    assert all(fac_contains(module, q) for q in small_quotients(module))


@pytest.mark.parametrize("index", range(SAMPLE_COUNT))
def test_annihilator_kills_sums_and_quotients(two_arrows, index):
    algebra, _ = two_arrows
    module = sample_modules(algebra)[index]
    killed = [direct_sum([module, module])[0]] + small_quotients(module)
    for element in annihilator(module).basis:
        assert all(other.act(element).is_zero() for other in killed)


@pytest.mark.parametrize("index", range(SAMPLE_COUNT))
def test_projective_cover_kernel_lies_in_the_radical(two_arrows, index):
    algebra, _ = two_arrows
    cover = projective_cover(sample_modules(algebra)[index])
    assert cover.is_surjective()
    syzygy_inclusion = kernel(cover)[1]
    radical_inclusion = radical_submodule(cover.source)[1]
    radical = Subspace(algebra.field, cover.source.dim, radical_inclusion.matrix.columns())
    assert all(radical.contains(column) for column in syzygy_inclusion.matrix.columns())


@pytest.mark.parametrize("index", range(SAMPLE_COUNT))
def test_summands_add_back_to_the_module(two_arrows, index):
    algebra, _ = two_arrows
    module = sample_modules(algebra)[index]
    parts = decompose(module)
    assert sum(part.dim for part in parts) == module.dim
    assert is_isomorphic(direct_sum(parts, algebra)[0], module)


@pytest.mark.parametrize("index", range(SAMPLE_COUNT))
def test_hom_dimension_depends_on_iso_class_only(two_arrows, index):
    algebra, _ = two_arrows
    modules = sample_modules(algebra)
    module = modules[index]
    reassembled = direct_sum(list(reversed(decompose(module))), algebra)[0]
    for other in modules:
        assert hom_dimension(module, other) == hom_dimension(reassembled, other)
        assert hom_dimension(other, module) == hom_dimension(other, reassembled)
