from fractions import Fraction
from typing import List, Sequence

from sympy import Matrix as SympyMatrix
from sympy import Poly, Rational, Symbol

from stable_tau.linalg import Element, FieldSpec, Matrix


_X = Symbol("x")


def _to_sympy(field: FieldSpec, value: Element) -> Rational:
    if field.p:
        return Rational(int(value))
    fraction = Fraction(value)
    return Rational(fraction.numerator, fraction.denominator)


def _from_sympy(field: FieldSpec, value: object) -> Element:
    if field.p:
        return int(value) % field.p  # type: ignore[call-overload]
    rational = Rational(value)  # type: ignore[arg-type]
    return Fraction(int(rational.p), int(rational.q))


def _poly(field: FieldSpec, coefficients: Sequence[Element]) -> Poly:
    """Polynomial from coefficients given highest degree first."""
    values = [_to_sympy(field, value) for value in coefficients]
    if field.p:
        return Poly(values, _X, modulus=field.p)
    return Poly(values, _X, domain="QQ")


def polynomial_roots(field: FieldSpec, coefficients: Sequence[Element]) -> List[Element]:
    """Distinct roots in the field of a polynomial given highest degree first."""
    poly = _poly(field, coefficients)
    if poly.is_zero:
        raise ValueError("The zero polynomial has every element as a root")
    if poly.degree() <= 0:
        return []
    _, factors = poly.factor_list()
    roots: List[Element] = []
    for factor, _ in factors:
        if factor.degree() != 1:
            continue
        lead, constant = factor.all_coeffs()
        lead_value = _from_sympy(field, lead)
        constant_value = _from_sympy(field, constant)
        root = field.reduce(-constant_value * field.inverse(lead_value))
        if root not in roots:
            roots.append(root)
    return sorted(roots)


def characteristic_polynomial(matrix: Matrix) -> List[Element]:
    if not matrix.is_square:
        raise ValueError("Characteristic polynomial needs a square matrix")
    field = matrix.field
    if matrix.rows == 0:
        return [field.one]
    # Over F_p the integer lift has the same characteristic polynomial modulo p.
    lifted = SympyMatrix(matrix.rows, matrix.cols, [_to_sympy(field, value) for value in matrix.flatten()])
    poly = lifted.charpoly(_X)
    return [field.reduce(_from_sympy(field, value)) if field.p else _from_sympy(field, value) for value in poly.all_coeffs()]


def eigenvalues(matrix: Matrix) -> List[Element]:
    return polynomial_roots(matrix.field, characteristic_polynomial(matrix))


def roots_of_unity(field: FieldSpec, order: int) -> List[Element]:
    """All x in the field with x ** order == 1."""
    if order <= 0:
        raise ValueError("Order must be positive")
    coefficients = [field.one] + [field.zero] * (order - 1) + [field.reduce(-field.one)]
    return polynomial_roots(field, coefficients)
