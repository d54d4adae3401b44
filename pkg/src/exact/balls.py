"""
Balls - certified complex evaluation at roots of unity.

Heavy computations run in mpmath interval contexts (one context per
precision); results are handed out as ComplexApprox balls. Exact questions
("does f vanish at omega?") are answered by cyclotomic divisibility in sympy
so that precision escalation is only used for genuinely nonzero values.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Any, Callable, Iterator, Optional, TypeVar, Union

import mpmath
import sympy
from mpmath.ctx_iv import MPIntervalContext
from mpmath.libmp import from_int, mpf_pi, round_ceiling, round_floor

from ..errors import DenominatorVanishesError, DivisionByZeroError, InputError
from ..logger import get_logger
from .laurent import LaurentPolynomial
from .ratfun import RationalFunction, as_rational_function
from .rational import parse_rational

DEFAULT_PRECISION = 128
DEFAULT_PRECISION_CAP = 4096

T = TypeVar("T")


# Roots of unity


@dataclass(frozen=True)
class RootOfUnity:
    """omega = exp(2*pi*i*numerator/denominator) with 0 < numerator/denominator < 1."""

    numerator: int
    denominator: int

    def __post_init__(self) -> None:
        if self.denominator <= 0:
            raise InputError(f"Angle denominator must be positive, got {self.denominator}")
        if not 0 < self.numerator < self.denominator:
            raise InputError(
                f"Angle {self.numerator}/{self.denominator} must lie strictly between 0 and 1"
            )
        common = gcd(self.numerator, self.denominator)
        if common != 1:
            object.__setattr__(self, "numerator", self.numerator // common)
            object.__setattr__(self, "denominator", self.denominator // common)

    @classmethod
    def from_angle(cls, angle: Union[str, Fraction]) -> "RootOfUnity":
        """Parse an angle "p/q" given as a fraction of a full turn."""
        value = parse_rational(angle)
        return cls(value.numerator, value.denominator)

    @property
    def angle(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    @property
    def order(self) -> int:
        return self.denominator

    def conjugate(self) -> "RootOfUnity":
        return RootOfUnity(self.denominator - self.numerator, self.denominator)

    def power(self, k: int) -> Optional["RootOfUnity"]:
        """omega^k, or None when it equals 1."""
        numerator = (self.numerator * k) % self.denominator
        if numerator == 0:
            return None
        return RootOfUnity(numerator, self.denominator)

    def is_minus_one(self) -> bool:
        return self.denominator == 2

    def render(self) -> str:
        return f"{self.numerator}/{self.denominator}"

    def __str__(self) -> str:
        return f"exp(2*pi*i*{self.render()})"


def cyclotomic_vanishes(f: LaurentPolynomial, omega: RootOfUnity) -> bool:
    """True iff f(omega) = 0, decided by divisibility by the cyclotomic polynomial."""
    if f.is_zero():
        return True
    poly, _ = f.to_poly()
    phi = sympy.cyclotomic_poly(omega.order, poly.gen, polys=True)
    return poly.rem(phi).is_zero


# Interval contexts


@lru_cache(maxsize=None)
def interval_context(bits: int) -> MPIntervalContext:
    """Interval context fixed at the given working precision."""
    ctx = MPIntervalContext()
    ctx.prec = bits
    return ctx


def precision_ladder(start: int, cap: int) -> Iterator[int]:
    """Yield start, 2*start, ... and finally cap."""
    logger = get_logger()
    bits = max(2, start)
    while True:
        yield bits
        if bits >= cap:
            return
        bits = min(2 * bits, cap)
        logger.debug(f"Raising precision to {bits} bits")


def escalate(
    compute: Callable[[int], Optional[T]],
    precision_bits: int,
    precision_cap: Optional[int],
) -> Optional[T]:
    """
    Run compute at increasing precision until it returns a value.

    Args:
        compute: Returns None while the answer is undecided at the given precision
        precision_bits: Starting precision
        precision_cap: Last precision tried

    Returns:
        First decided value, or None when the cap is reached undecided
    """
    cap = max(precision_cap or DEFAULT_PRECISION_CAP, precision_bits)
    for bits in precision_ladder(precision_bits, cap):
        result = compute(bits)
        if result is not None:
            return result
    return None


def iv_pi(ctx: MPIntervalContext) -> Any:
    return ctx.make_mpf((mpf_pi(ctx.prec, round_floor), mpf_pi(ctx.prec, round_ceiling)))


def iv_rational(ctx: MPIntervalContext, value: Union[int, Fraction]) -> Any:
    value = Fraction(value)
    if value.denominator == 1:
        return ctx.mpf(value.numerator)
    return ctx.mpf(value.numerator) / ctx.mpf(value.denominator)


def iv_root_of_unity(ctx: MPIntervalContext, omega: RootOfUnity) -> Any:
    """Enclosure of omega; exact for the angles 1/4, 1/2 and 3/4."""
    exact = {
        Fraction(1, 4): (0, 1),
        Fraction(1, 2): (-1, 0),
        Fraction(3, 4): (0, -1),
    }.get(omega.angle)
    if exact is not None:
        return ctx.mpc(exact[0], exact[1])
    theta = 2 * iv_pi(ctx) * ctx.mpf(omega.numerator) / ctx.mpf(omega.denominator)
    return ctx.mpc(ctx.cos(theta), ctx.sin(theta))


def iv_conjugate(z: Any) -> Any:
    """Complex conjugate of an interval; mpmath 1.3's ivmpc.conjugate is broken."""
    return z.ctx.mpc(z.real, -z.imag)


def iv_laurent(ctx: MPIntervalContext, f: LaurentPolynomial, point: Any) -> Any:
    """Enclosure of f(point) for a point on the unit circle (Horner scheme)."""
    if f.is_zero():
        return ctx.mpc(0, 0)
    high = f.max_exponent
    low = f.min_exponent
    coefficients = f.terms
    value = ctx.mpc(0, 0)
    for exponent in range(high, low - 1, -1):
        value = value * point + ctx.mpf(coefficients.get(exponent, 0))
    # Unit modulus: point^-1 is the conjugate.
    factor = point if low >= 0 else iv_conjugate(point)
    for _ in range(abs(low)):
        value = value * factor
    return value


def iv_contains_zero(z: Any) -> bool:
    return 0 in z


def lower(x: Any) -> mpmath.mpf:
    """Lower endpoint of a real interval as an mpmath float."""
    return mpmath.mp.make_mpf(x._mpi_[0])


def upper(x: Any) -> mpmath.mpf:
    """Upper endpoint of a real interval as an mpmath float."""
    return mpmath.mp.make_mpf(x._mpi_[1])


def certified_sign(x: Any) -> Optional[int]:
    """Sign of a real interval, or None if it contains 0."""
    if lower(x) > 0:
        return 1
    if upper(x) < 0:
        return -1
    return None


# Complex balls


def _exact_mpf(n: int) -> mpmath.mpf:
    return mpmath.mp.make_mpf(from_int(n))


@dataclass(frozen=True)
class ComplexApprox:
    """
    Ball with centre real + i*imaginary and radius error_radius.

    The exact value lies within error_radius of the centre.
    """

    real: mpmath.mpf
    imaginary: mpmath.mpf
    precision_bits: int
    error_radius: mpmath.mpf

    @classmethod
    def from_interval(cls, z: Any, bits: int) -> "ComplexApprox":
        """Smallest-centred ball containing an interval box."""
        ctx = interval_context(bits)
        z = ctx.convert(z)
        re = z.real
        im = z.imag
        re_mid = mpmath.mp.make_mpf(re.mid._mpi_[0])
        im_mid = mpmath.mp.make_mpf(im.mid._mpi_[0])
        spread = ctx.absmax(re - ctx.mpf(re_mid)) + ctx.absmax(im - ctx.mpf(im_mid))
        return cls(re_mid, im_mid, bits, upper(spread))

    @classmethod
    def from_integer(cls, n: int, bits: int = DEFAULT_PRECISION) -> "ComplexApprox":
        return cls(_exact_mpf(n), _exact_mpf(0), bits, _exact_mpf(0))

    @classmethod
    def from_rational(
        cls, value: Union[int, Fraction], bits: int = DEFAULT_PRECISION
    ) -> "ComplexApprox":
        value = Fraction(value)
        if value.denominator == 1:
            return cls.from_integer(value.numerator, bits)
        ctx = interval_context(bits)
        return cls.from_interval(ctx.mpc(iv_rational(ctx, value), 0), bits)

    def to_interval(self, ctx: MPIntervalContext) -> Any:
        """Interval box enclosing the ball."""
        radius = ctx.mpf((-self.error_radius, self.error_radius))
        return ctx.mpc(ctx.mpf(self.real) + radius, ctx.mpf(self.imaginary) + radius)

    def _combine(self, other: object, op: Callable[[Any, Any], Any]) -> "ComplexApprox":
        other_ball = _coerce(other, self.precision_bits)
        if other_ball is None:
            return NotImplemented
        bits = max(self.precision_bits, other_ball.precision_bits)
        ctx = interval_context(bits)
        combined = op(self.to_interval(ctx), other_ball.to_interval(ctx))
        return ComplexApprox.from_interval(combined, bits)

    def __add__(self, other: object) -> "ComplexApprox":
        return self._combine(other, lambda a, b: a + b)

    def __radd__(self, other: object) -> "ComplexApprox":
        return self._combine(other, lambda a, b: b + a)

    def __sub__(self, other: object) -> "ComplexApprox":
        return self._combine(other, lambda a, b: a - b)

    def __rsub__(self, other: object) -> "ComplexApprox":
        return self._combine(other, lambda a, b: b - a)

    def __mul__(self, other: object) -> "ComplexApprox":
        return self._combine(other, lambda a, b: a * b)

    def __rmul__(self, other: object) -> "ComplexApprox":
        return self._combine(other, lambda a, b: b * a)

    def __truediv__(self, other: object) -> "ComplexApprox":
        other_ball = _coerce(other, self.precision_bits)
        if other_ball is None:
            return NotImplemented
        if other_ball.contains_zero():
            raise DivisionByZeroError("Divisor ball contains 0")
        return self._combine(other_ball, lambda a, b: a / b)

    def __neg__(self) -> "ComplexApprox":
        return ComplexApprox(-self.real, -self.imaginary, self.precision_bits, self.error_radius)

    def conjugate(self) -> "ComplexApprox":
        return ComplexApprox(self.real, -self.imaginary, self.precision_bits, self.error_radius)

    def modulus(self) -> "ComplexApprox":
        """Ball around |z| on the real axis."""
        ctx = interval_context(self.precision_bits)
        modulus = ctx.mpc(abs(self.to_interval(ctx)), 0)
        return ComplexApprox.from_interval(modulus, self.precision_bits)

    def real_part(self) -> "ComplexApprox":
        return ComplexApprox(self.real, _exact_mpf(0), self.precision_bits, self.error_radius)

    # Certified predicates

    def contains(self, value: Union[int, Fraction]) -> bool:
        return (self - ComplexApprox.from_rational(value, self.precision_bits)).contains_zero()

    def contains_zero(self) -> bool:
        ctx = interval_context(self.precision_bits)
        return iv_contains_zero(self.to_interval(ctx))

    def overlaps(self, other: "ComplexApprox") -> bool:
        """True when the two balls may denote the same number."""
        return (self - other).contains_zero()

    def real_sign(self) -> Optional[int]:
        ctx = interval_context(self.precision_bits)
        return certified_sign(self.to_interval(ctx).real)

    def imag_sign(self) -> Optional[int]:
        ctx = interval_context(self.precision_bits)
        return certified_sign(self.to_interval(ctx).imag)

    def compare_real(self, threshold: Union[int, Fraction]) -> Optional[int]:
        """Certified sign of Re(z) - threshold."""
        return (self - ComplexApprox.from_rational(threshold, self.precision_bits)).real_sign()

    def is_real(self) -> bool:
        """True when the ball meets the real axis."""
        return abs(self.imaginary) <= self.error_radius

    def nearest_integer(self) -> Optional[int]:
        """The integer n with |z - n| < 1/2 for every point of the ball, if any."""
        n = int(mpmath.nint(self.real))
        ctx = interval_context(self.precision_bits)
        box = self.to_interval(ctx) - ctx.mpc(n, 0)
        half = ctx.mpf(1) / 2
        if upper(ctx.absmax(box.real)) < lower(half) and upper(ctx.absmax(box.imag)) < lower(half):
            return n
        return None

    def radius_at_most(self, bound: Union[float, str]) -> bool:
        return self.error_radius <= mpmath.mpf(bound)

    # Rendering

    def render(self, digits: int = 20) -> str:
        sign = "-" if self.imaginary < 0 else "+"
        return (
            f"{mpmath.nstr(self.real, digits)} {sign} {mpmath.nstr(abs(self.imaginary), digits)}*i"
            f" +/- {mpmath.nstr(self.error_radius, 3)}"
        )

    def to_json(self, digits: int = 30) -> dict[str, Any]:
        return {
            "real": mpmath.nstr(self.real, digits),
            "imag": mpmath.nstr(self.imaginary, digits),
            "radius": mpmath.nstr(self.error_radius, 5),
            "precision_bits": self.precision_bits,
        }

    def __str__(self) -> str:
        return self.render()


def _coerce(value: object, bits: int) -> Optional[ComplexApprox]:
    if isinstance(value, ComplexApprox):
        return value
    if isinstance(value, bool):
        return None
    if isinstance(value, (int, Fraction)):
        return ComplexApprox.from_rational(value, bits)
    return None


# Evaluation


def eval_root_of_unity(
    f: Union[int, LaurentPolynomial, RationalFunction],
    omega: RootOfUnity,
    precision_bits: int = DEFAULT_PRECISION,
    precision_cap: Optional[int] = None,
) -> ComplexApprox:
    """
    Certified value of a rational function at omega.

    Args:
        f: Value to evaluate
        omega: Root of unity
        precision_bits: Starting precision
        precision_cap: Escalation cap (default 4096 bits)

    Returns:
        Ball containing f(omega)

    Raises:
        DenominatorVanishesError: If omega is a pole of f
    """
    rf = as_rational_function(f)
    if cyclotomic_vanishes(rf.denominator, omega):
        raise DenominatorVanishesError(f"{rf.render()} has a pole at {omega}")
    if rf.numerator.is_constant() and rf.denominator.is_constant():
        return ComplexApprox.from_rational(
            Fraction(rf.numerator.constant_value(), rf.denominator.constant_value()), precision_bits
        )

    def attempt(bits: int) -> Optional[ComplexApprox]:
        ctx = interval_context(bits)
        point = iv_root_of_unity(ctx, omega)
        den = iv_laurent(ctx, rf.denominator, point)
        if iv_contains_zero(den):
            return None
        return ComplexApprox.from_interval(iv_laurent(ctx, rf.numerator, point) / den, bits)

    result = escalate(attempt, precision_bits, precision_cap)
    if result is None:
        raise DenominatorVanishesError(
            f"Cannot separate the denominator of {rf.render()} from 0 at {omega}"
        )
    return result
