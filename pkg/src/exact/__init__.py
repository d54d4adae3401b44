"""
Exact module - Rationals, Laurent polynomials, rational functions and certified balls.
"""

from .rational import parse_rational, render_rational
from .laurent import (
    LaurentPolynomial,
    equal_up_to_unit,
    laurent_canonical_unit,
    parse_laurent,
)
from .ratfun import RationalFunction, parse_rational_function, ratfun_reduce
from .balls import (
    DEFAULT_PRECISION,
    DEFAULT_PRECISION_CAP,
    ComplexApprox,
    RootOfUnity,
    cyclotomic_vanishes,
    eval_root_of_unity,
)

__all__ = [
    "parse_rational",
    "render_rational",
    "LaurentPolynomial",
    "equal_up_to_unit",
    "laurent_canonical_unit",
    "parse_laurent",
    "RationalFunction",
    "parse_rational_function",
    "ratfun_reduce",
    "DEFAULT_PRECISION",
    "DEFAULT_PRECISION_CAP",
    "ComplexApprox",
    "RootOfUnity",
    "cyclotomic_vanishes",
    "eval_root_of_unity",
]
