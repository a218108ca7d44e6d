"""Two-term complexes of projectives and the silting side of a support tau-tilting pair."""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from stable_tau.common import ResourceAbort, engine_random
from stable_tau.config import ISO_RANDOM_TRIALS
from stable_tau.linalg import (
    Element,
    Matrix,
    Subspace,
    Vector,
    from_columns,
    hstack,
    identity_matrix,
    kernel_basis,
    linear_combination,
    solve,
    zero_matrix,
)
from stable_tau.modules import ModuleMap, Representation, cokernel, hom_space, is_isomorphic, kernel, projective_sum
from stable_tau.tau import SttPair, minimal_presentation


@dataclass(frozen=True, eq=False)
class TwoTermComplex:
    """P1 -> P0 in degrees -1 and 0."""

    differential: ModuleMap

    def __post_init__(self) -> None:
        if self.p1.projective_indices is None or self.p0.projective_indices is None:
            raise ValueError("Both terms of a two-term complex must be standard projective sums")

    @property
    def p1(self) -> Representation:
        return self.differential.source

    @property
    def p0(self) -> Representation:
        return self.differential.target

    @property
    def d(self) -> Matrix:
        return self.differential.matrix


@dataclass(frozen=True, eq=False)
class ChainMap:
    source: TwoTermComplex
    target: TwoTermComplex
    degree_minus_one: Matrix
    degree_zero: Matrix


def pair_to_silting(pair: SttPair) -> TwoTermComplex:
    """(T, P) -> (P1 + P -> P0) with differential (d, 0) from the minimal presentation of T."""
    algebra = pair.algebra
    presentation = minimal_presentation(pair.t_module)
    p1_indices = tuple(presentation.p1.projective_indices or ()) + tuple(pair.p_parts)
    p0 = presentation.p0
    p1 = projective_sum(algebra, p1_indices)
    extra = p1.dim - presentation.p1.dim
    matrix = hstack(algebra.field, [presentation.differential.matrix, zero_matrix(algebra.field, p0.dim, extra)], p0.dim)
    return TwoTermComplex(ModuleMap(p1, p0, matrix))


def h0(complex_: TwoTermComplex) -> Representation:
    return cokernel(complex_.differential)[0]


def h_minus_one(complex_: TwoTermComplex) -> Representation:
    return kernel(complex_.differential)[0]


def hom_k_shift(complex_: TwoTermComplex) -> int:
    """dim Hom_K(P, P[1]): maps P1 -> P0 modulo d a + b d."""
    maps = hom_space(complex_.p1, complex_.p0)
    if not maps:
        return 0
    d = complex_.d
    homotopic = [d @ a.matrix for a in hom_space(complex_.p1, complex_.p1)]
    homotopic += [b.matrix @ d for b in hom_space(complex_.p0, complex_.p0)]
    size = complex_.p0.dim * complex_.p1.dim
    return len(maps) - Subspace(complex_.p1.field, size, [m.flatten() for m in homotopic]).dim


def is_presilting(complex_: TwoTermComplex) -> bool:
    return hom_k_shift(complex_) == 0


def chain_map_basis(source: TwoTermComplex, target: TwoTermComplex) -> List[ChainMap]:
    """Pairs (u1, u0) with d' u1 = u0 d."""
    field = source.p1.field
    ones = [f.matrix for f in hom_space(source.p1, target.p1)]
    zeros = [f.matrix for f in hom_space(source.p0, target.p0)]
    residuals: List[Vector] = [(target.d @ u).flatten() for u in ones]
    residuals += [(zero_matrix(field, target.p0.dim, source.p0.dim) - u @ source.d).flatten() for u in zeros]
    size = target.p0.dim * source.p1.dim
    count = len(ones) + len(zeros)
    if not count:
        return []
    solutions = kernel_basis(from_columns(field, residuals, size)).columns()
    result = []
    for coefficients in solutions:
        u1 = linear_combination(field, coefficients[:len(ones)], ones, target.p1.dim, source.p1.dim)
        u0 = linear_combination(field, coefficients[len(ones):], zeros, target.p0.dim, source.p0.dim)
        result.append(ChainMap(source, target, u1, u0))
    return result


def is_null_homotopic(chain: ChainMap) -> bool:
    """u1 = h d and u0 = d' h for some h: P0 -> P1'."""
    source, target = chain.source, chain.target
    homotopies = [h.matrix for h in hom_space(source.p0, target.p1)]
    goal = chain.degree_minus_one.flatten() + chain.degree_zero.flatten()
    if all(value == 0 for value in goal):
        return True
    if not homotopies:
        return False
    columns = [(h @ source.d).flatten() + (target.d @ h).flatten() for h in homotopies]
    return solve(from_columns(source.p1.field, columns, len(goal)), goal) is not None


def _k0_class(complex_: TwoTermComplex) -> Tuple[int, ...]:
    algebra = complex_.p0.algebra
    counts = [0] * algebra.vertex_count
    for index in complex_.p0.projective_indices or ():
        counts[index] += 1
    for index in complex_.p1.projective_indices or ():
        counts[index] -= 1
    return tuple(counts)


def _random_chain_map(basis: Sequence[ChainMap]) -> ChainMap:
    first = basis[0]
    field = first.source.p1.field
    rng = engine_random()
    coefficients: List[Element] = [field.random_element(rng) for _ in basis]
    return ChainMap(
        first.source,
        first.target,
        linear_combination(field, coefficients, [c.degree_minus_one for c in basis], first.target.p1.dim, first.source.p1.dim),
        linear_combination(field, coefficients, [c.degree_zero for c in basis], first.target.p0.dim, first.source.p0.dim),
    )


def _has_homotopy_inverse(u: ChainMap, backward: Sequence[ChainMap]) -> bool:
    """Solve v u ~ 1 and u v ~ 1 for v in the span of ``backward`` as one linear system."""
    first, second = u.source, u.target
    field = first.p1.field
    u1, u0 = u.degree_minus_one, u.degree_zero

    def zeros(*shapes: Tuple[int, int]) -> Vector:
        return tuple(field.zero for rows, cols in shapes for _ in range(rows * cols))

    columns: List[Vector] = []
    for v in backward:
        v1, v0 = v.degree_minus_one, v.degree_zero
        columns.append((v1 @ u1).flatten() + (v0 @ u0).flatten() + (u1 @ v1).flatten() + (u0 @ v0).flatten())
    tail = ((second.p1.dim, second.p1.dim), (second.p0.dim, second.p0.dim))
    head = ((first.p1.dim, first.p1.dim), (first.p0.dim, first.p0.dim))
    for h in hom_space(first.p0, first.p1):
        negative = zero_matrix(field, first.p1.dim, first.p0.dim) - h.matrix
        columns.append((negative @ first.d).flatten() + (first.d @ negative).flatten() + zeros(*tail))
    for h in hom_space(second.p0, second.p1):
        negative = zero_matrix(field, second.p1.dim, second.p0.dim) - h.matrix
        columns.append(zeros(*head) + (negative @ second.d).flatten() + (second.d @ negative).flatten())
    goal = (
        identity_matrix(field, first.p1.dim).flatten()
        + identity_matrix(field, first.p0.dim).flatten()
        + identity_matrix(field, second.p1.dim).flatten()
        + identity_matrix(field, second.p0.dim).flatten()
    )
    if not columns:
        return all(value == 0 for value in goal)
    return solve(from_columns(field, columns, len(goal)), goal) is not None


def homotopy_equivalent(first: TwoTermComplex, second: TwoTermComplex) -> bool:
    if _k0_class(first) != _k0_class(second):
        return False
    forward = chain_map_basis(first, second)
    backward = chain_map_basis(second, first)
    if not forward or not backward:
        # Only complexes that are contractible have no nonzero maps in and out.
        zero = ChainMap(
            first,
            second,
            zero_matrix(first.p1.field, second.p1.dim, first.p1.dim),
            zero_matrix(first.p1.field, second.p0.dim, first.p0.dim),
        )
        return _has_homotopy_inverse(zero, backward)
    for _ in range(ISO_RANDOM_TRIALS):
        if _has_homotopy_inverse(_random_chain_map(forward), backward):
            return True
    logging.debug("Random chain maps found no homotopy inverse, comparing homology")
    if not is_isomorphic(h0(first), h0(second)) or not is_isomorphic(h_minus_one(first), h_minus_one(second)):
        return False
    raise ResourceAbort("Homotopy equivalence search exhausted its budget")
