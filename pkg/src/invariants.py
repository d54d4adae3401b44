"""
Invariants - Alexander and Conway polynomials, signatures, crossing changes.

A crossing change is modelled as 1/n-surgery along a disk boundary with
linking vector v against the surface basis. Each crossing-change quantity
is available two ways: from the closed formulas in lambda, and from the
explicit surface matrix of the changed knot.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, NamedTuple, Optional, Tuple

from .covers import goeritz_lambda
from .data import GoeritzData
from .errors import (
    BasisConversionError,
    DimensionMismatchError,
    InvalidInputError,
    InvalidSpecError,
    MissingEulerNumberError,
    NumericallyUncertainError,
    OmegaIsAlexanderRootError,
    SingularMatrixError,
)
from .exact import (
    ComplexApprox,
    LaurentPolynomial,
    RootOfUnity,
    cyclotomic_vanishes,
    laurent_canonical_unit,
)
from .exact.balls import (
    DEFAULT_PRECISION,
    escalate,
    interval_context,
    iv_conjugate,
    iv_root_of_unity,
)
from .linalg import (
    ExactMatrix,
    ball_bilinear,
    det_exact,
    hermitian_signature_at_omega,
    inverse_bilinear,
    alexander_matrix,
    seifert_alexander_determinant,
    symmetric_signature,
)
from .logger import get_logger

logger = get_logger()

T_MINUS_ONE = LaurentPolynomial({0: -1, 1: 1})
Z = LaurentPolynomial({1: 1, -1: -1})


@dataclass(frozen=True)
class CrossingChangeSpec:
    """1/n-surgery along a disk boundary with linking vector v against the surface basis."""

    v: Tuple[int, ...]
    n: int
    epsilon: int = 1
    disk_link: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "v", tuple(int(x) for x in self.v))
        if self.n == 0:
            raise InvalidSpecError("n must be nonzero (1/0-surgery changes nothing)")
        if self.epsilon not in (1, -1):
            raise InvalidSpecError(f"epsilon must be +1 or -1, got {self.epsilon}")
        if self.disk_link < 0:
            raise InvalidSpecError(
                f"disk_link is |lk(dD, K)| and must be >= 0, got {self.disk_link}"
            )

    def check_size(self, size: int) -> None:
        if len(self.v) != size:
            raise DimensionMismatchError(
                f"v has length {len(self.v)}, the surface basis has {size}"
            )

    def require_oriented(self) -> None:
        if self.disk_link:
            raise InvalidSpecError("Oriented crossing changes need disk_link = 0")


# Classical invariants


def alexander(m: ExactMatrix) -> LaurentPolynomial:
    """det(tM - M^T) in canonical unit form."""
    return laurent_canonical_unit(seifert_alexander_determinant(m))


def conway_potential(m: ExactMatrix) -> LaurentPolynomial:
    """Omega(t) = det(t^-1 M - t M^T)."""
    if m.rows == 0:
        return LaurentPolynomial.constant(1)
    t = LaurentPolynomial.t()
    t_inverse = LaurentPolynomial.monomial(1, -1)
    return det_exact(m.map(lambda e: t_inverse * e) - m.transpose().map(lambda e: t * e))


def conway(m: ExactMatrix) -> LaurentPolynomial:
    """
    Conway polynomial as a polynomial in z (render with variable "z").

    Raises:
        BasisConversionError: If det(t^-1 M - t M^T) is not a polynomial in t - 1/t
    """
    remainder = conway_potential(m)
    coefficients = {}
    while not remainder.is_zero():
        degree = remainder.max_exponent
        if degree < 0 or remainder.min_exponent != -degree:
            raise BasisConversionError(
                f"{remainder} is not a polynomial in z = t - 1/t; is M a Seifert matrix?"
            )
        coefficient = remainder.coefficient(degree)
        coefficients[degree] = coefficient
        remainder = remainder - (Z ** degree) * coefficient
    return LaurentPolynomial(coefficients)


def conway_to_alexander(nabla: LaurentPolynomial) -> LaurentPolynomial:
    """Substitute z = t^(1/2) - t^(-1/2) through z^2 = t - 2 + 1/t (even powers only)."""
    z_squared = LaurentPolynomial({1: 1, 0: -2, -1: 1})
    total = LaurentPolynomial()
    for exponent, coefficient in nabla.items():
        if exponent % 2:
            raise BasisConversionError("Odd powers of z do not occur for knots")
        total = total + (z_squared ** (exponent // 2)) * coefficient
    return total


def _require_not_alexander_root(m: ExactMatrix, omega: RootOfUnity) -> None:
    if m.rows and cyclotomic_vanishes(seifert_alexander_determinant(m), omega):
        raise OmegaIsAlexanderRootError(f"{omega} is a root of the Alexander polynomial")


def tristram_levine(
    m: ExactMatrix,
    omega: RootOfUnity,
    precision_bits: int = DEFAULT_PRECISION,
    precision_cap: Optional[int] = None,
) -> int:
    """
    Signature of (1 - conj(w)) M + (1 - w) M^T.

    Raises:
        OmegaIsAlexanderRootError: If omega is a root of the Alexander polynomial
        NumericallyUncertainError: If the pivots cannot be certified
    """
    _require_not_alexander_root(m, omega)
    return hermitian_signature_at_omega(m, omega, precision_bits, precision_cap).signature


def goeritz_signature(data: GoeritzData) -> int:
    """
    sign(G) + e(F)/2.

    Raises:
        MissingEulerNumberError: If the data has no normal Euler number
        SingularMatrixError: If G is singular
    """
    if data.euler_number is None:
        raise MissingEulerNumberError("The Goeritz data has no euler_number")
    triple = symmetric_signature(data.matrix)
    if triple.zeros:
        raise SingularMatrixError("The Goeritz matrix is singular")
    return triple.signature + data.euler_number // 2


def _iv_unit_circle_values(ctx: Any, omega: RootOfUnity) -> Tuple[Any, Any]:
    """Enclosures of |1 - w|^2 and i |1 - w|."""
    w = iv_root_of_unity(ctx, omega)
    modulus_squared = (2 - w - iv_conjugate(w)).real
    return modulus_squared, ctx.mpc(0, ctx.sqrt(modulus_squared))


def _iv_polynomial(ctx: Any, f: LaurentPolynomial, point: Any) -> Any:
    value = ctx.mpc(0, 0)
    if f.is_zero():
        return value
    coefficients = f.terms
    for exponent in range(f.max_exponent, -1, -1):
        value = value * point + ctx.mpf(coefficients.get(exponent, 0))
    return value


def conway_at_omega(
    m: ExactMatrix,
    omega: RootOfUnity,
    precision_bits: int = DEFAULT_PRECISION,
) -> ComplexApprox:
    """Ball around nabla_K(i |1 - w|)."""
    nabla = conway(m)
    ctx = interval_context(precision_bits)
    _, point = _iv_unit_circle_values(ctx, omega)
    return ComplexApprox.from_interval(_iv_polynomial(ctx, nabla, point), precision_bits)


def signature_phase(
    m: ExactMatrix,
    omega: RootOfUnity,
    precision_bits: int = DEFAULT_PRECISION,
    precision_cap: Optional[int] = None,
) -> int:
    """
    Certified sign of nabla_K(i |1 - w|), which equals i^sigma_w(K).

    Raises:
        OmegaIsAlexanderRootError: If omega is a root of the Alexander polynomial
        NumericallyUncertainError: If the sign cannot be certified
    """
    _require_not_alexander_root(m, omega)
    sign = escalate(
        lambda bits: conway_at_omega(m, omega, bits).real_sign(), precision_bits, precision_cap
    )
    if sign is None:
        raise NumericallyUncertainError(f"Cannot certify the sign of the Conway value at {omega}")
    return sign


# Oriented crossing change


def crossing_change_seifert(m: ExactMatrix, spec: CrossingChangeSpec) -> ExactMatrix:
    """
    Seifert matrix of the changed knot in the basis (a, b, alpha).

    [[0, 1, eps v], [0, -n, 0], [0, 0, M]]

    Raises:
        InvalidSpecError: If disk_link != 0
        DimensionMismatchError: If v does not match M
    """
    spec.require_oriented()
    spec.check_size(m.rows)
    size = m.rows
    top = [[0, 1] + [spec.epsilon * x for x in spec.v], [0, -spec.n] + [0] * size]
    body = [[0, 0] + m.row(r) for r in range(size)]
    return ExactMatrix(top + body, size + 2)


def _lambda_disk_t(m: ExactMatrix, spec: CrossingChangeSpec) -> Any:
    if m.rows == 0:
        return 0
    return inverse_bilinear(spec.v, alexander_matrix(m), spec.v)


def crossing_change_alexander(m: ExactMatrix, spec: CrossingChangeSpec) -> LaurentPolynomial:
    """
    Canonical form of (1 - n (t - 1) lambda(dD)(t)) Delta_K(t).

    Raises:
        InvalidSpecError: If disk_link != 0
    """
    spec.require_oriented()
    spec.check_size(m.rows)
    factor = 1 - _lambda_disk_t(m, spec) * (T_MINUS_ONE * spec.n)
    product = factor * seifert_alexander_determinant(m)
    if isinstance(product, LaurentPolynomial):
        return laurent_canonical_unit(product)
    if not product.is_laurent():
        raise ArithmeticError(f"Crossing-change Alexander polynomial {product} is not a polynomial")
    return laurent_canonical_unit(product.numerator)


def _disk_test_value(
    m: ExactMatrix,
    spec: CrossingChangeSpec,
    omega: RootOfUnity,
    bits: int,
) -> ComplexApprox:
    """Ball around n |1 - w|^2 lambda(dD; w)."""
    lam = ball_bilinear(spec.v, m, spec.v, omega, bits, bits)
    ctx = interval_context(bits)
    modulus_squared, _ = _iv_unit_circle_values(ctx, omega)
    factor = ComplexApprox.from_interval(ctx.mpc(modulus_squared * spec.n, 0), bits)
    return factor * lam


def crossing_change_signature(
    m: ExactMatrix,
    spec: CrossingChangeSpec,
    omega: RootOfUnity,
    precision_bits: int = DEFAULT_PRECISION,
    precision_cap: Optional[int] = None,
) -> int:
    """
    Predicted sigma_w of the changed knot.

    sigma_w(K) - 2 sign(n) when n |1 - w|^2 lambda(dD; w) > 1, else sigma_w(K).

    Raises:
        OmegaIsAlexanderRootError: If omega is a root of either Alexander polynomial
        NumericallyUncertainError: If the comparison with 1 cannot be certified
    """
    spec.require_oriented()
    spec.check_size(m.rows)
    _require_not_alexander_root(m, omega)
    if cyclotomic_vanishes(crossing_change_alexander(m, spec), omega):
        raise OmegaIsAlexanderRootError(
            f"{omega} is a root of the Alexander polynomial of the changed knot"
        )
    sigma = tristram_levine(m, omega, precision_bits, precision_cap)
    if m.rows == 0 or not any(spec.v):
        return sigma

    comparison = escalate(
        lambda bits: _disk_test_value(m, spec, omega, bits).compare_real(1),
        precision_bits,
        precision_cap,
    )
    if comparison is None:
        raise NumericallyUncertainError(f"Cannot compare the disk test value with 1 at {omega}")
    if comparison > 0:
        return sigma - 2 * (1 if spec.n > 0 else -1)
    return sigma


class ConwayRatio(NamedTuple):
    """Both sides of the Conway ratio identity and the sign of the Conway ratio."""

    lhs: ComplexApprox
    rhs: ComplexApprox
    ratio_sign: int


def conway_ratio_identity(
    m: ExactMatrix,
    spec: CrossingChangeSpec,
    omega: RootOfUnity,
    precision_bits: int = DEFAULT_PRECISION,
    precision_cap: Optional[int] = None,
) -> ConwayRatio:
    """
    lhs = n |1 - w|^2 lambda(dD; w) and rhs = 1 - nabla_Kn(i|1 - w|) / nabla_K(i|1 - w|).

    The ratio sign is negative exactly when sigma_w jumps.

    Raises:
        OmegaIsAlexanderRootError: If omega is a root of the Alexander polynomial
        NumericallyUncertainError: If a Conway value cannot be separated from 0
    """
    spec.require_oriented()
    spec.check_size(m.rows)
    _require_not_alexander_root(m, omega)
    changed = crossing_change_seifert(m, spec)

    def attempt(bits: int) -> Optional[ConwayRatio]:
        before = conway_at_omega(m, omega, bits)
        after = conway_at_omega(changed, omega, bits)
        if before.contains_zero() or after.contains_zero():
            return None
        ratio = after / before
        sign = ratio.real_sign()
        if sign is None:
            return None
        lhs = (
            _disk_test_value(m, spec, omega, bits)
            if m.rows
            else ComplexApprox.from_integer(0, bits)
        )
        return ConwayRatio(lhs, 1 - ratio, sign)

    result = escalate(attempt, precision_bits, precision_cap)
    if result is None:
        raise NumericallyUncertainError(f"Cannot certify the Conway values at {omega}")
    return result


# Unoriented crossing change


def crossing_change_goeritz(data: GoeritzData, spec: CrossingChangeSpec) -> GoeritzData:
    """
    Goeritz data of the changed knot in the basis (a, b, alpha).

    [[0, 1, eps v], [1, -2n, 0], [eps v^T, 0, G]] with e(F') = e(F) + 2n |lk(dD, K)|.

    Raises:
        MissingEulerNumberError: If the data has no normal Euler number
    """
    if data.euler_number is None:
        raise MissingEulerNumberError("The Goeritz data has no euler_number")
    spec.check_size(data.size)
    size = data.size
    border = [spec.epsilon * x for x in spec.v]
    top = [[0, 1] + border, [1, -2 * spec.n] + [0] * size]
    body = [[border[r], 0] + data.matrix.row(r) for r in range(size)]
    matrix = ExactMatrix(top + body, size + 2)
    return GoeritzData.build(matrix, euler_number=data.euler_number + 2 * spec.n * spec.disk_link)


def crossing_change_signature_unoriented(data: GoeritzData, spec: CrossingChangeSpec) -> int:
    """
    Predicted sigma(K_n) = sign(diag(1/2n - lambda, -2n)) + sign(G) + e(F)/2 + n |lk(dD, K)|.

    Raises:
        MissingEulerNumberError: If the data has no normal Euler number
        SingularMatrixError: If G is singular
        InvalidInputError: If 2 n lambda(dD) = 1
    """
    if data.euler_number is None:
        raise MissingEulerNumberError("The Goeritz data has no euler_number")
    spec.check_size(data.size)
    lam = Fraction(0) if data.size == 0 else inverse_bilinear(spec.v, data.matrix, spec.v)
    pivot = Fraction(1, 2 * spec.n) - lam
    if pivot == 0:
        raise InvalidInputError("2 n lambda(dD) = 1 cannot occur for a crossing change")
    disk_block = (1 if pivot > 0 else -1) + (1 if spec.n < 0 else -1)
    return disk_block + goeritz_signature(data) + spec.n * spec.disk_link


def goeritz_disk_lambda(data: GoeritzData, spec: CrossingChangeSpec) -> Fraction:
    """lambda(dD) for the disk vector of a crossing change."""
    spec.check_size(data.size)
    if data.size == 0:
        return Fraction(0)
    probe = GoeritzData.build(data.matrix, components={"dD": spec.v})
    return goeritz_lambda(probe, "dD", "dD")
