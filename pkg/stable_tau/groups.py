"""Finite groups given by multiplication tables."""

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import lcm
from typing import Dict, List, Sequence, Tuple

from sympy.combinatorics import Permutation, PermutationGroup

from stable_tau.common import InputError


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    # table[a][b] is the index of a * b.
    table: Tuple[Tuple[int, ...], ...]
    generators: Tuple[int, ...]
    labels: Tuple[str, ...] = ()

    def __post_init__(self) -> None:
        n = len(self.table)
        if n == 0:
            raise InputError("A group needs at least one element")
        if any(len(row) != n or any(not 0 <= value < n for value in row) for row in self.table):
            raise InputError("The multiplication table is not square or names unknown elements")
        if self.labels and len(self.labels) != n:
            raise InputError("Every group element needs a label")
        if any(not 0 <= g < n for g in self.generators):
            raise InputError("Generator index out of range")
        for a in range(n):
            if sorted(self.table[a]) != list(range(n)):
                raise InputError("The multiplication table is not a Latin square")
            for b in range(n):
                for c in range(n):
                    if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                        raise InputError("The multiplication table is not associative")
        if len(self.cayley_order) != n:
            raise InputError("The generators do not generate the group")

    def __len__(self) -> int:
        return len(self.table)

    @property
    def order(self) -> int:
        return len(self.table)

    @cached_property
    def identity(self) -> int:
        for e in range(len(self.table)):
            if all(self.table[e][g] == g and self.table[g][e] == g for g in range(len(self.table))):
                return e
        raise InputError("The multiplication table has no identity")

    def multiply(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return self.table[a].index(self.identity)

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else f"g{a}"

    def element_order(self, a: int) -> int:
        power, count = a, 1
        while power != self.identity:
            power = self.multiply(a, power)
            count += 1
        return count

    @cached_property
    def cayley_order(self) -> Tuple[Tuple[int, int, int], ...]:
        """Breadth-first spanning tree: (element, generator position, predecessor) with element = s * predecessor."""
        seen = {self.identity}
        order: List[Tuple[int, int, int]] = [(self.identity, -1, -1)]
        position = 0
        while position < len(order):
            current = order[position][0]
            for index, s in enumerate(self.generators):
                product = self.multiply(s, current)
                if product not in seen:
                    seen.add(product)
                    order.append((product, index, current))
            position += 1
        return tuple(order)

    @cached_property
    def permutation_group(self) -> PermutationGroup:
        permutations = [Permutation(list(self.table[g])) for g in self.generators]
        return PermutationGroup(permutations or [Permutation(list(range(self.order)))])

    @property
    def is_abelian(self) -> bool:
        return bool(self.permutation_group.is_abelian)

    @property
    def is_solvable(self) -> bool:
        return bool(self.permutation_group.is_solvable)

    @cached_property
    def commutator_quotient_order(self) -> int:
        """|G / [G, G]|, the number of characters over a field with enough roots of unity."""
        return self.order // int(self.permutation_group.derived_subgroup().order())

    @cached_property
    def exponent(self) -> int:
        return lcm(*(self.element_order(g) for g in range(self.order)))


def group_from_table(table: Sequence[Sequence[int]], generators: Sequence[int], labels: Sequence[str] = ()) -> FiniteGroup:
    return FiniteGroup(tuple(tuple(row) for row in table), tuple(generators), tuple(labels))


def cyclic_product(orders: Sequence[int]) -> FiniteGroup:
    """Z/n_1 x ... x Z/n_k with the standard generators."""
    if any(order <= 0 for order in orders):
        raise InputError("Cyclic orders must be positive")
    elements = list(itertools.product(*(range(order) for order in orders)))
    position: Dict[Tuple[int, ...], int] = {element: index for index, element in enumerate(elements)}
    table = tuple(
        tuple(position[tuple((x + y) % n for x, y, n in zip(a, b, orders))] for b in elements)
        for a in elements
    )
    generators = tuple(
        position[tuple(1 % order if i == k else 0 for i, order in enumerate(orders))]
        for k in range(len(orders))
    )
    return FiniteGroup(table, generators, tuple(_cyclic_label(element) for element in elements))


def _cyclic_label(exponents: Tuple[int, ...]) -> str:
    factors = []
    for index, exponent in enumerate(exponents):
        if exponent == 1:
            factors.append(f"g{index + 1}")
        elif exponent > 1:
            factors.append(f"g{index + 1}^{exponent}")
    return "*".join(factors) or "1"


def trivial_group() -> FiniteGroup:
    return cyclic_product(())
