"""
Covers - Linking pairings in branched and infinite cyclic covers.

Every pairing is a bilinear value V A^-1 W^T for the appropriate matrix:
the Goeritz matrix (double branched cover), tM - M^T (infinite cyclic
cover), the omega-form of M, or the block matrix M_p (p-fold cover).
An empty matrix (a disk) gives 0 for every pairing.
"""

from fractions import Fraction
from typing import List, Optional, Tuple

from .data import GoeritzData, SeifertData
from .errors import (
    InputError,
    NotRationalHomologySphereError,
    NumericallyUncertainError,
    OmegaIsAlexanderRootError,
    SamePointError,
)
from .exact import (
    ComplexApprox,
    LaurentPolynomial,
    RationalFunction,
    RootOfUnity,
    cyclotomic_vanishes,
    eval_root_of_unity,
)
from .exact.balls import DEFAULT_PRECISION, escalate
from .linalg import (
    ExactMatrix,
    alexander_matrix,
    ball_bilinear,
    det_exact,
    inverse_bilinear,
    inverse_matrix,
    omega_form_is_singular,
    seifert_alexander_determinant,
)
from .logger import get_logger

logger = get_logger()

Lift = Tuple[str, int]

ONE_MINUS_T = LaurentPolynomial({0: 1, 1: -1})


def _check_distinct(first: Lift, second: Lift) -> None:
    if first == second:
        raise SamePointError(f"Both arguments are the lift {first[0]}@{first[1]}")


def _check_sheet(sheet: int, sheets: int) -> None:
    if not 1 <= sheet <= sheets:
        raise InputError(f"Sheet {sheet} outside 1..{sheets}")


# Double branched cover


def goeritz_lambda(data: GoeritzData, i: str, j: str) -> Fraction:
    """
    Goeritz pairing V(K_i) G^-1 V(K_j)^T (0 for the disk).

    Raises:
        SingularMatrixError: If G is singular
    """
    vi = data.vector(i)
    vj = data.vector(j)
    if data.size == 0:
        return Fraction(0)
    return inverse_bilinear(vi, data.matrix, vj)


def double_cover_lk(data: GoeritzData, first: Lift, second: Lift) -> Fraction:
    """
    Linking number of two lifts in the double branched cover.

    Args:
        data: Goeritz data
        first: (label, sheet) with sheet in {1, 2}
        second: (label, sheet)

    Returns:
        (1 - d_ij) d_kl lk(K_i, K_j) + (-1)^d_kl lambda(K_i, K_j)

    Raises:
        SamePointError: If both lifts coincide
        MissingAmbientLkError: If i != j and lk(K_i, K_j) is unknown
    """
    (i, k), (j, l) = first, second
    _check_sheet(k, 2)
    _check_sheet(l, 2)
    _check_distinct(first, second)
    lam = goeritz_lambda(data, i, j)
    if k == l:
        ambient = data.require_ambient(i, j) if i != j else Fraction(0)
        return ambient - lam
    return lam


def double_cover_invariant(data: GoeritzData, i: str, j: str) -> Fraction:
    """|2 lambda(K_i, K_j) - lk(K_i, K_j)|, with lk(K_i, K_i) = 0."""
    ambient = data.require_ambient(i, j) if i != j else Fraction(0)
    return abs(2 * goeritz_lambda(data, i, j) - ambient)


# Infinite cyclic cover


def seifert_lambda_t(data: SeifertData, i: str, j: str) -> RationalFunction:
    """V(K_i) (tM - M^T)^-1 V(K_j)^T as a canonical rational function."""
    vi = data.vector(i)
    vj = data.vector(j)
    if data.size == 0:
        return RationalFunction.zero()
    return inverse_bilinear(vi, alexander_matrix(data.matrix), vj)


def infinite_cyclic_lk(
    data: SeifertData,
    i: str,
    j: str,
    translates: Tuple[int, int] = (0, 0),
) -> RationalFunction:
    """
    Linking pairing lk~(tau^m K_i, tau^n K_j) in the infinite cyclic cover.

    For i = j the parallel copy has ambient linking number 0 unless the
    data records a self-pairing.

    Args:
        data: Seifert data
        i: First component
        j: Second component
        translates: (m, n) deck translates of the two lifts

    Returns:
        t^(m - n) ((1 - t) lambda(K_i, K_j)(t) + lk(K_i, K_j))

    Raises:
        MissingAmbientLkError: If i != j and lk(K_i, K_j) is unknown
    """
    if i == j:
        ambient = data.ambient(i, i) or Fraction(0)
    else:
        ambient = data.require_ambient(i, j)
    if ambient.denominator != 1:
        raise InputError(f"Ambient linking number of ({i}, {j}) must be an integer")
    value = seifert_lambda_t(data, i, j) * ONE_MINUS_T + ambient.numerator
    m, n = translates
    return value * LaurentPolynomial.monomial(1, m - n)


def eta_function(data: SeifertData, i: str) -> RationalFunction:
    """eta(K, K_i; t) = (1 - t) lambda(K_i, K_i)(t)."""
    return seifert_lambda_t(data, i, i) * ONE_MINUS_T


def dual_basis_linking(m: ExactMatrix) -> ExactMatrix:
    """The matrix (1 - t)(tM - M^T)^-1, entrywise canonical."""
    if m.rows == 0:
        return ExactMatrix.empty()
    return inverse_matrix(alexander_matrix(m)).map(lambda e: e * ONE_MINUS_T)


def seifert_lambda_omega(
    data: SeifertData,
    i: str,
    j: str,
    omega: RootOfUnity,
    precision_bits: int = DEFAULT_PRECISION,
    precision_cap: Optional[int] = None,
) -> ComplexApprox:
    """
    Certified V(K_i) G_w^-1 V(K_j)^T for G_w = (1 - conj(w)) M + (1 - w) M^T.

    Raises:
        OmegaIsAlexanderRootError: If omega is a root of the Alexander polynomial
        NumericallyUncertainError: If certification fails up to the cap
    """
    vi = data.vector(i)
    vj = data.vector(j)
    if omega_form_is_singular(data.matrix, omega):
        raise OmegaIsAlexanderRootError(f"{omega} is a root of the Alexander polynomial")
    return ball_bilinear(vi, data.matrix, vj, omega, precision_bits, precision_cap)


# p-fold branched cover


def branched_matrix(m: ExactMatrix, p: int) -> ExactMatrix:
    """
    Presentation matrix M_p of H_1 of the p-fold branched cover.

    Block tridiagonal with M + M^T on the diagonal, -M^T above and -M below.
    """
    if p < 2:
        raise InputError(f"p must be at least 2, got {p}")
    n = m.rows
    size = (p - 1) * n
    blocks = {0: m + m.transpose(), 1: -m.transpose(), -1: -m}

    def entry(r: int, c: int) -> int:
        block = blocks.get(c // n - r // n)
        return 0 if block is None else block[r % n, c % n]

    return ExactMatrix.from_function(size, size, entry)


def homology_order(m: ExactMatrix, p: int) -> int:
    """|det M_p|: the order of H_1 of the p-fold branched cover (0 when infinite)."""
    return abs(int(det_exact(branched_matrix(m, p))))


def _sheet_vector(vector: Tuple[int, ...], k: int, p: int) -> List[int]:
    n = len(vector)
    return [0] * ((k - 1) * n) + list(vector) + [0] * ((p - k - 1) * n)


def lambda_kl(data: SeifertData, p: int, k: int, l: int, i: str, j: str) -> Fraction:
    """
    V_p^k(K_i) M_p^-1 V_p^l(K_j)^T.

    Raises:
        NotRationalHomologySphereError: If det M_p = 0
    """
    _check_sheet(k, p - 1)
    _check_sheet(l, p - 1)
    vi = data.vector(i)
    vj = data.vector(j)
    if data.size == 0:
        return Fraction(0)
    mp = branched_matrix(data.matrix, p)
    if det_exact(mp) == 0:
        raise NotRationalHomologySphereError(
            f"The {p}-fold branched cover is not a rational homology sphere"
        )
    return inverse_bilinear(_sheet_vector(vi, k, p), mp, _sheet_vector(vj, l, p))


def _table_terms(k: int, l: int, p: int) -> List[Tuple[int, int, int]]:
    """Signed lambda^(k', l') terms of lk(K_ik, K_jl) - (1 - d_ij) d_kl lk(K_i, K_j), for k <= l."""
    if k == 1 and l == 1:
        return [(-1, 1, 1)]
    if k == p and l == p:
        return [(-1, p - 1, p - 1)]
    if k == 1 and l == p:
        return [(1, 1, p - 1)]
    if k == 1:
        return [(1, 1, l - 1), (-1, 1, l)]
    if l == p:
        return [(-1, k - 1, p - 1), (1, k, p - 1)]
    return [(-1, k - 1, l - 1), (1, k - 1, l), (1, k, l - 1), (-1, k, l)]


def p_fold_lk(data: SeifertData, p: int, first: Lift, second: Lift) -> Fraction:
    """
    Linking number of two lifts in the p-fold branched cover.

    Raises:
        SamePointError: If both lifts coincide
        NotRationalHomologySphereError: If det M_p = 0
        MissingAmbientLkError: If i != j and lk(K_i, K_j) is unknown
    """
    if p < 2:
        raise InputError(f"p must be at least 2, got {p}")
    _check_sheet(first[1], p)
    _check_sheet(second[1], p)
    _check_distinct(first, second)
    if first[1] > second[1]:
        first, second = second, first
    (i, k), (j, l) = first, second

    if data.size and det_exact(branched_matrix(data.matrix, p)) == 0:
        raise NotRationalHomologySphereError(
            f"The {p}-fold branched cover is not a rational homology sphere"
        )
    value = Fraction(0)
    if i != j and k == l:
        value += data.require_ambient(i, j)
    for sign, kk, ll in _table_terms(k, l, p):
        value += sign * lambda_kl(data, p, kk, ll, i, j)
    return value


def fox_order(
    m: ExactMatrix,
    p: int,
    precision_bits: int = DEFAULT_PRECISION,
    precision_cap: Optional[int] = None,
) -> int:
    """
    prod_{j=1}^{p-1} |Delta(w_p^j)| by certified evaluation and rounding.

    Raises:
        NumericallyUncertainError: If the product cannot be rounded with certainty
    """
    if p < 2:
        raise InputError(f"p must be at least 2, got {p}")
    delta = seifert_alexander_determinant(m)
    roots = [RootOfUnity(j, p) for j in range(1, p)]
    if any(cyclotomic_vanishes(delta, omega) for omega in roots):
        return 0

    def attempt(bits: int) -> Optional[int]:
        product = ComplexApprox.from_integer(1, bits)
        for omega in roots:
            product = product * eval_root_of_unity(delta, omega, bits, bits).modulus()
        return product.nearest_integer()

    result = escalate(attempt, precision_bits, precision_cap)
    if result is None:
        raise NumericallyUncertainError(f"Cannot round the Fox product for p = {p}")
    logger.debug(f"Fox product for p = {p}: {result}")
    return result
