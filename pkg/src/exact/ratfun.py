"""
Rational functions - the quotient field of Z[t, 1/t] in canonical form.
"""

from fractions import Fraction
from typing import Tuple, Union

import sympy

from ..errors import DenominatorVanishesError, DivisionByZeroError, InputError
from .laurent import LaurentPolynomial, parse_sympy, sympy_to_laurent


class RationalFunction:
    """
    Quotient num/den of Laurent polynomials.

    Canonical form: num and den coprime, den has lowest exponent 0 and a
    positive constant term, every power of t sits in the numerator. Two
    rational functions are equal iff their canonical pairs are identical.
    Build instances through ratfun_reduce or the arithmetic operators.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: LaurentPolynomial, denominator: LaurentPolynomial) -> None:
        # Trusted constructor: callers pass an already canonical pair.
        self.numerator = numerator
        self.denominator = denominator

    @classmethod
    def from_laurent(cls, value: Union[int, LaurentPolynomial]) -> "RationalFunction":
        if isinstance(value, int):
            value = LaurentPolynomial.constant(value)
        return cls(value, LaurentPolynomial.constant(1))

    @classmethod
    def zero(cls) -> "RationalFunction":
        return cls.from_laurent(0)

    @classmethod
    def one(cls) -> "RationalFunction":
        return cls.from_laurent(1)

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_laurent(self) -> bool:
        """True when the denominator is 1."""
        return self.denominator == 1

    # Arithmetic

    def __add__(self, other: object) -> "RationalFunction":
        other_rf = _coerce(other)
        if other_rf is None:
            return NotImplemented
        if self.denominator == other_rf.denominator:
            return ratfun_reduce(self.numerator + other_rf.numerator, self.denominator)
        return ratfun_reduce(
            self.numerator * other_rf.denominator + other_rf.numerator * self.denominator,
            self.denominator * other_rf.denominator,
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.numerator, self.denominator)

    def __sub__(self, other: object) -> "RationalFunction":
        other_rf = _coerce(other)
        if other_rf is None:
            return NotImplemented
        return self + (-other_rf)

    def __rsub__(self, other: object) -> "RationalFunction":
        other_rf = _coerce(other)
        if other_rf is None:
            return NotImplemented
        return other_rf + (-self)

    def __mul__(self, other: object) -> "RationalFunction":
        other_rf = _coerce(other)
        if other_rf is None:
            return NotImplemented
        return ratfun_reduce(
            self.numerator * other_rf.numerator,
            self.denominator * other_rf.denominator,
        )

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise DivisionByZeroError("The zero rational function has no inverse")
        return ratfun_reduce(self.denominator, self.numerator)

    def __truediv__(self, other: object) -> "RationalFunction":
        other_rf = _coerce(other)
        if other_rf is None:
            return NotImplemented
        return self * other_rf.inverse()

    def __rtruediv__(self, other: object) -> "RationalFunction":
        other_rf = _coerce(other)
        if other_rf is None:
            return NotImplemented
        return other_rf * self.inverse()

    def __pow__(self, exponent: int) -> "RationalFunction":
        base = self if exponent >= 0 else self.inverse()
        return ratfun_reduce(base.numerator ** abs(exponent), base.denominator ** abs(exponent))

    def substitute_inverse(self) -> "RationalFunction":
        """Image under t -> 1/t."""
        return ratfun_reduce(
            self.numerator.substitute_inverse(), self.denominator.substitute_inverse()
        )

    def evaluate(self, value: Union[int, Fraction]) -> Fraction:
        """
        Exact value at a nonzero rational point.

        Raises:
            DenominatorVanishesError: If the point is a pole
        """
        den = self.denominator.evaluate(value)
        if den == 0:
            raise DenominatorVanishesError(f"{self.render()} has a pole at t = {value}")
        return self.numerator.evaluate(value) / den

    # Comparison and rendering

    def _key(self) -> Tuple[LaurentPolynomial, LaurentPolynomial]:
        return self.numerator, self.denominator

    def __eq__(self, other: object) -> bool:
        other_rf = _coerce(other)
        if other_rf is None:
            return NotImplemented
        return self._key() == other_rf._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def render(self, variable: str = "t") -> str:
        """Render as "(num)/(den)", or just the numerator when den = 1."""
        if self.is_laurent():
            return self.numerator.render(variable)
        return f"({self.numerator.render(variable)})/({self.denominator.render(variable)})"

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"RationalFunction({self.render()!r})"


RationalFunctionLike = Union[int, LaurentPolynomial, RationalFunction]


def _coerce(value: object) -> Union[RationalFunction, None]:
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, LaurentPolynomial):
        return RationalFunction.from_laurent(value)
    if isinstance(value, int) and not isinstance(value, bool):
        return RationalFunction.from_laurent(value)
    return None


def ratfun_reduce(num: LaurentPolynomial, den: LaurentPolynomial) -> RationalFunction:
    """
    Bring num/den to canonical form.

    Args:
        num: Numerator
        den: Denominator

    Returns:
        Canonical rational function

    Raises:
        DivisionByZeroError: If den is zero
    """
    if isinstance(num, int):
        num = LaurentPolynomial.constant(num)
    if isinstance(den, int):
        den = LaurentPolynomial.constant(den)
    if den.is_zero():
        raise DivisionByZeroError("Rational function with zero denominator")
    if num.is_zero():
        return RationalFunction.zero()

    num_poly, num_shift = num.to_poly()
    den_poly, den_shift = den.to_poly()
    common = num_poly.gcd(den_poly)
    num_poly = num_poly.exquo(common)
    den_poly = den_poly.exquo(common)

    numerator = LaurentPolynomial.from_poly(num_poly, num_shift - den_shift)
    denominator = LaurentPolynomial.from_poly(den_poly)
    if denominator.lowest_coefficient < 0:
        numerator, denominator = -numerator, -denominator
    return RationalFunction(numerator, denominator)


def as_rational_function(value: RationalFunctionLike) -> RationalFunction:
    coerced = _coerce(value)
    if coerced is None:
        raise InputError(f"Not a rational function: {value!r}")
    return coerced


def parse_rational_function(text: str, variable: str = "t") -> RationalFunction:
    """Inverse of RationalFunction.render."""
    expression = sympy.together(parse_sympy(text, variable))
    num, den = sympy.fraction(expression)
    return ratfun_reduce(sympy_to_laurent(num, variable), sympy_to_laurent(den, variable))
