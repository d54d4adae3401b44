"""
Rational numbers - parsing and rendering of exact rationals.

Rationals are plain ``fractions.Fraction`` values; this module only fixes
their text form ("p/q", or "n" when q = 1).
"""

import re
from fractions import Fraction
from typing import Union

from ..errors import DivisionByZeroError, InputError

RationalLike = Union[int, Fraction, str]

_RATIONAL_PATTERN = re.compile(r"^\s*([+\-−]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(value: RationalLike) -> Fraction:
    """
    Parse an integer, a Fraction or a "p/q" string.

    Args:
        value: Value to convert

    Returns:
        Exact rational

    Raises:
        InputError: If the text is not a rational literal
        DivisionByZeroError: If the denominator is zero
    """
    if isinstance(value, bool):
        raise InputError(f"Not a rational number: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if not isinstance(value, str):
        raise InputError(f"Not a rational number: {value!r}")

    match = _RATIONAL_PATTERN.match(value)
    if match is None:
        raise InputError(f"Not a rational number: {value!r}")

    numerator = int(match.group(1).replace("−", "-"))
    denominator = int(match.group(2)) if match.group(2) else 1
    if denominator == 0:
        raise DivisionByZeroError(f"Zero denominator in {value!r}")
    return Fraction(numerator, denominator)


def render_rational(value: Union[int, Fraction]) -> str:
    """Render a rational as "p/q", or "n" when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
