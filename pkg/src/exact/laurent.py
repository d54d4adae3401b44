"""
Laurent polynomials - exact elements of Z[t, 1/t].

Polynomials are immutable maps exponent -> nonzero integer coefficient.
Greatest common divisors and exact quotients are delegated to sympy.
"""

import math
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

import sympy
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication_application,
    parse_expr,
    standard_transformations,
)
from sympy.polys.polyerrors import ExactQuotientFailed

from ..errors import DivisionByZeroError, InputError, ZeroPolynomialError

Scalar = Union[int, Fraction]

_TRANSFORMATIONS = standard_transformations + (
    implicit_multiplication_application,
    convert_xor,
)


class LaurentPolynomial:
    """Immutable Laurent polynomial with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(
        self, terms: Union[Mapping[int, int], Iterable[Tuple[int, int]], None] = None
    ) -> None:
        """
        Build a polynomial from exponent/coefficient pairs.

        Args:
            terms: Mapping or pairs exponent -> coefficient; repeated
                exponents are summed, zero coefficients dropped
        """
        collected: Dict[int, int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for exponent, coefficient in items:
                if isinstance(coefficient, bool) or not isinstance(coefficient, int):
                    coefficient = _as_int(coefficient)
                collected[int(exponent)] = collected.get(int(exponent), 0) + coefficient
        self._terms: Tuple[Tuple[int, int], ...] = tuple(
            sorted((e, c) for e, c in collected.items() if c != 0)
        )
        self._hash = hash(self._terms)

    # Constructors

    @classmethod
    def constant(cls, value: int) -> "LaurentPolynomial":
        return cls({0: value})

    @classmethod
    def monomial(cls, coefficient: int, exponent: int) -> "LaurentPolynomial":
        return cls({exponent: coefficient})

    @classmethod
    def t(cls) -> "LaurentPolynomial":
        return cls({1: 1})

    @classmethod
    def from_coefficients(cls, coefficients: Iterable[int], low: int = 0) -> "LaurentPolynomial":
        """Build c_0*t^low + c_1*t^(low+1) + ... from an increasing coefficient list."""
        return cls((low + i, c) for i, c in enumerate(coefficients))

    # Accessors

    @property
    def terms(self) -> Dict[int, int]:
        """Copy of the exponent -> coefficient map."""
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[int, int]]:
        return iter(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def min_exponent(self) -> int:
        if not self._terms:
            raise ZeroPolynomialError("The zero polynomial has no lowest exponent")
        return self._terms[0][0]

    @property
    def max_exponent(self) -> int:
        if not self._terms:
            raise ZeroPolynomialError("The zero polynomial has no highest exponent")
        return self._terms[-1][0]

    def coefficient(self, exponent: int) -> int:
        return dict(self._terms).get(exponent, 0)

    @property
    def lowest_coefficient(self) -> int:
        return self._terms[0][1] if self._terms else 0

    @property
    def highest_coefficient(self) -> int:
        return self._terms[-1][1] if self._terms else 0

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and self._terms[0][0] == 0)

    def constant_value(self) -> int:
        """Value of a constant polynomial."""
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.coefficient(0)

    # Arithmetic

    def __add__(self, other: object) -> "LaurentPolynomial":
        other_poly = _coerce(other)
        if other_poly is None:
            return NotImplemented
        merged = dict(self._terms)
        for exponent, coefficient in other_poly._terms:
            merged[exponent] = merged.get(exponent, 0) + coefficient
        return LaurentPolynomial(merged)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial((e, -c) for e, c in self._terms)

    def __sub__(self, other: object) -> "LaurentPolynomial":
        other_poly = _coerce(other)
        if other_poly is None:
            return NotImplemented
        return self + (-other_poly)

    def __rsub__(self, other: object) -> "LaurentPolynomial":
        other_poly = _coerce(other)
        if other_poly is None:
            return NotImplemented
        return other_poly + (-self)

    def __mul__(self, other: object) -> "LaurentPolynomial":
        other_poly = _coerce(other)
        if other_poly is None:
            return NotImplemented
        product: Dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other_poly._terms:
                product[e1 + e2] = product.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentPolynomial":
        if exponent < 0:
            if len(self._terms) == 1 and abs(self._terms[0][1]) == 1:
                e, c = self._terms[0]
                return LaurentPolynomial({e * exponent: c ** (-exponent)})
            raise ValueError("Only units can be raised to negative powers")
        result = LaurentPolynomial.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by t^k."""
        return LaurentPolynomial((e + k, c) for e, c in self._terms)

    def substitute_inverse(self) -> "LaurentPolynomial":
        """Image under t -> 1/t."""
        return LaurentPolynomial((-e, c) for e, c in self._terms)

    def evaluate(self, value: Scalar) -> Fraction:
        """Exact value at a nonzero rational point."""
        value = Fraction(value)
        if value == 0 and self._terms and self._terms[0][0] < 0:
            raise DivisionByZeroError("Negative exponent evaluated at 0")
        return sum((Fraction(c) * value ** e for e, c in self._terms), Fraction(0))

    def content(self) -> int:
        """Gcd of the coefficients (0 for the zero polynomial)."""
        return math.gcd(*(coefficient for _, coefficient in self._terms))

    # Division via sympy

    def to_poly(self) -> Tuple[sympy.Poly, int]:
        """
        Split off the lowest power of t.

        Returns:
            Tuple (poly, shift) with self = t^shift * poly and poly(0) != 0
        """
        if not self._terms:
            return sympy.Poly(0, _SYMBOL, domain=sympy.ZZ), 0
        low = self._terms[0][0]
        high = self._terms[-1][0]
        dense = [0] * (high - low + 1)
        for exponent, coefficient in self._terms:
            dense[high - exponent] = coefficient
        return sympy.Poly(dense, _SYMBOL, domain=sympy.ZZ), low

    @classmethod
    def from_poly(cls, poly: sympy.Poly, shift: int = 0) -> "LaurentPolynomial":
        coefficients = poly.all_coeffs()
        degree = len(coefficients) - 1
        return cls((shift + degree - i, int(c)) for i, c in enumerate(coefficients))

    def exquo(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        """
        Exact quotient in Z[t, 1/t].

        Raises:
            DivisionByZeroError: If other is zero
            ArithmeticError: If the division is not exact
        """
        other = _coerce(other)
        if other is None or other.is_zero():
            raise DivisionByZeroError("Exact division by the zero polynomial")
        if self.is_zero():
            return self
        if len(other._terms) == 1:
            e, c = other._terms[0]
            if all(coefficient % c == 0 for _, coefficient in self._terms):
                return LaurentPolynomial(
                    (exp - e, coefficient // c) for exp, coefficient in self._terms
                )
            raise ArithmeticError(f"{other} does not divide {self}")
        p, ps = self.to_poly()
        q, qs = other.to_poly()
        try:
            quotient = p.exquo(q)
        except ExactQuotientFailed as e:
            raise ArithmeticError(f"{other} does not divide {self}") from e
        return LaurentPolynomial.from_poly(quotient, ps - qs)

    def gcd(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        """Gcd in Z[t, 1/t], normalized to lowest exponent 0 and positive lowest coefficient."""
        if self.is_zero():
            return other.normalized_associate() if other else other
        if other.is_zero():
            return self.normalized_associate()
        p, _ = self.to_poly()
        q, _ = other.to_poly()
        return LaurentPolynomial.from_poly(p.gcd(q)).normalized_associate()

    def normalized_associate(self) -> "LaurentPolynomial":
        """Associate with lowest exponent 0 and positive lowest coefficient."""
        if not self._terms:
            return self
        shifted = self.shift(-self.min_exponent)
        return -shifted if shifted.lowest_coefficient < 0 else shifted

    # Comparison and rendering

    def __eq__(self, other: object) -> bool:
        other_poly = _coerce(other)
        if other_poly is None:
            return NotImplemented
        return self._terms == other_poly._terms

    def __hash__(self) -> int:
        return self._hash

    def render(self, variable: str = "t") -> str:
        """Render terms in increasing exponent order, e.g. "-1 + 3*t - t^2"."""
        if not self._terms:
            return "0"
        pieces = []
        for index, (exponent, coefficient) in enumerate(self._terms):
            body = _render_term(abs(coefficient), exponent, variable)
            if index == 0:
                pieces.append(f"-{body}" if coefficient < 0 else body)
            else:
                pieces.append(f" - {body}" if coefficient < 0 else f" + {body}")
        return "".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.render()!r})"


_SYMBOL = sympy.Symbol("t")

LaurentLike = Union[int, LaurentPolynomial]


def _as_int(value: object) -> int:
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    if isinstance(value, sympy.Integer):
        return int(value)
    raise InputError(f"Laurent coefficients must be integers, got {value!r}")


def _coerce(value: object) -> Union[LaurentPolynomial, None]:
    if isinstance(value, LaurentPolynomial):
        return value
    if isinstance(value, bool):
        return None
    if isinstance(value, int):
        return LaurentPolynomial.constant(value)
    if isinstance(value, Fraction) and value.denominator == 1:
        return LaurentPolynomial.constant(value.numerator)
    return None


def _render_term(magnitude: int, exponent: int, variable: str) -> str:
    if exponent == 0:
        return str(magnitude)
    monomial = variable if exponent == 1 else f"{variable}^{exponent}"
    if magnitude == 1:
        return monomial
    return f"{magnitude}*{monomial}"


def laurent_canonical_unit(f: LaurentPolynomial) -> LaurentPolynomial:
    """
    Canonical representative of f up to multiplication by +-t^k.

    The result has lowest exponent 0; its sign makes the value at t = 1
    positive, or the lowest coefficient positive when f(1) = 0.

    Raises:
        ZeroPolynomialError: If f is zero
    """
    if f.is_zero():
        raise ZeroPolynomialError("The zero polynomial has no canonical unit form")
    shifted = f.shift(-f.min_exponent)
    value_at_one = sum(c for _, c in shifted.items())
    if value_at_one != 0:
        sign = 1 if value_at_one > 0 else -1
    else:
        sign = 1 if shifted.lowest_coefficient > 0 else -1
    return shifted if sign > 0 else -shifted


def equal_up_to_unit(f: LaurentPolynomial, g: LaurentPolynomial) -> bool:
    """True iff f = +-t^k * g for some integer k (two zeros count as equal)."""
    if f.is_zero() or g.is_zero():
        return f.is_zero() and g.is_zero()
    return laurent_canonical_unit(f) == laurent_canonical_unit(g)


def sympy_to_laurent(expression: sympy.Expr, variable: str = "t") -> LaurentPolynomial:
    """
    Convert an expanded sympy expression in one variable to a Laurent polynomial.

    Raises:
        InputError: If the expression is not a Laurent polynomial with integer coefficients
    """
    symbol = sympy.Symbol(variable)
    expression = sympy.expand(expression)
    terms: Dict[int, int] = {}
    for monomial, coefficient in expression.as_coefficients_dict().items():
        if not coefficient.is_Integer:
            raise InputError(f"Non-integer coefficient {coefficient} in {expression}")
        if monomial == 1:
            exponent = 0
        else:
            base, power = monomial.as_base_exp()
            if base != symbol or not power.is_Integer:
                raise InputError(f"Unexpected term {monomial} in {expression}")
            exponent = int(power)
        terms[exponent] = terms.get(exponent, 0) + int(coefficient)
    return LaurentPolynomial(terms)


def parse_sympy(text: str, variable: str = "t") -> sympy.Expr:
    """Parse text in the rendering syntax ("c*t^e", unicode minus allowed)."""
    cleaned = text.replace("−", "-").strip()
    if not cleaned:
        raise InputError("Empty polynomial text")
    try:
        return parse_expr(
            cleaned,
            local_dict={variable: sympy.Symbol(variable)},
            transformations=_TRANSFORMATIONS,
        )
    except (SyntaxError, TypeError, sympy.SympifyError) as e:
        raise InputError(f"Cannot parse {text!r}: {e}") from e


def parse_laurent(text: str, variable: str = "t") -> LaurentPolynomial:
    """Inverse of LaurentPolynomial.render."""
    return sympy_to_laurent(parse_sympy(text, variable), variable)
