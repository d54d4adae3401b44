"""
Elimination - Determinants, linear solves and inverse bilinear forms.

Integer and Laurent matrices are eliminated fraction-free (Bareiss), so
entries never leave their ring until the final quotient. Rational and
rational-function matrices use plain Gaussian elimination in the field.
"""

from fractions import Fraction
from functools import singledispatch
from typing import Any, List, Sequence, Tuple

from ..errors import DimensionMismatchError, SingularMatrixError
from ..exact import LaurentPolynomial, RationalFunction, ratfun_reduce
from .matrix import INTEGER, LAURENT, RATFUN, RATIONAL, ExactMatrix, dot, lift, one_of, zero_of


@singledispatch
def _exquo(a: Any, b: Any) -> Any:
    raise TypeError(f"No exact division for {type(a).__name__}")


@_exquo.register
def _(a: int, b: int) -> int:
    quotient, remainder = divmod(a, b)
    if remainder:
        raise ArithmeticError(f"{b} does not divide {a}")
    return quotient


@_exquo.register
def _(a: LaurentPolynomial, b: Any) -> LaurentPolynomial:
    return a.exquo(b)


def _is_ring_kind(kind: str) -> bool:
    return kind in (INTEGER, LAURENT)


def _bareiss(rows: List[List[Any]], n: int) -> Tuple[int, bool]:
    """
    In-place fraction-free forward elimination on the first n columns.

    Returns:
        Tuple (sign, singular): sign of the row permutation, and whether a
        pivot column was entirely zero
    """
    sign = 1
    previous: Any = 1
    for k in range(n):
        pivot = next((r for r in range(k, n) if rows[r][k] != 0), None)
        if pivot is None:
            return sign, True
        if pivot != k:
            rows[k], rows[pivot] = rows[pivot], rows[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, len(rows[i])):
                rows[i][j] = _exquo(rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j], previous)
            rows[i][k] = 0 * rows[i][k]
        previous = rows[k][k]
    return sign, False


def _gauss(rows: List[List[Any]], n: int) -> Tuple[Any, bool]:
    """
    In-place field elimination to upper-triangular form on the first n columns.

    Returns:
        Tuple (det, singular)
    """
    det: Any = 1
    for k in range(n):
        pivot = next((r for r in range(k, n) if rows[r][k] != 0), None)
        if pivot is None:
            return 0, True
        if pivot != k:
            rows[k], rows[pivot] = rows[pivot], rows[k]
            det = -det
        det = det * rows[k][k]
        inverse = 1 / rows[k][k] if isinstance(rows[k][k], Fraction) else rows[k][k].inverse()
        for i in range(k + 1, n):
            if rows[i][k] == 0:
                continue
            factor = rows[i][k] * inverse
            for j in range(k, len(rows[i])):
                rows[i][j] = rows[i][j] - factor * rows[k][j]
    return det, False


def det_exact(a: ExactMatrix) -> Any:
    """
    Exact determinant in the entry kind (0x0 gives 1).

    Raises:
        NotSquareError: If the matrix is not square
    """
    a.require_square()
    n = a.rows
    if n == 0:
        return one_of(a.kind)
    rows = a.to_lists()
    if _is_ring_kind(a.kind):
        sign, singular = _bareiss(rows, n)
        if singular:
            return zero_of(a.kind)
        return sign * rows[n - 1][n - 1]
    det, singular = _gauss(rows, n)
    return zero_of(a.kind) if singular else lift(det, a.kind)


def solve_exact(a: ExactMatrix, b: Sequence[Any]) -> Tuple[List[Any], Any]:
    """
    Solve A x = b as the pair (det(A) * x, det(A)).

    For integer and Laurent matrices both parts stay in the ring (the first
    part is the adjugate applied to b).

    Raises:
        NotSquareError: If A is not square
        DimensionMismatchError: If b has the wrong length
        SingularMatrixError: If det(A) = 0
    """
    a.require_square()
    n = a.rows
    if len(b) != n:
        raise DimensionMismatchError(f"Right-hand side of length {len(b)} for {n}x{n} system")
    if n == 0:
        return [], one_of(a.kind)

    rows = [row + [lift(value, a.kind)] for row, value in zip(a.to_lists(), b)]
    if _is_ring_kind(a.kind):
        sign, singular = _bareiss(rows, n)
        if singular:
            raise SingularMatrixError("Matrix is singular")
        d = rows[n - 1][n - 1]
        y: List[Any] = [0] * n
        for i in range(n - 1, -1, -1):
            acc = d * rows[i][n]
            for j in range(i + 1, n):
                acc = acc - rows[i][j] * y[j]
            y[i] = _exquo(acc, rows[i][i])
        return [sign * value for value in y], sign * d

    det, singular = _gauss(rows, n)
    if singular:
        raise SingularMatrixError("Matrix is singular")
    x: List[Any] = [0] * n
    for i in range(n - 1, -1, -1):
        acc = rows[i][n]
        for j in range(i + 1, n):
            acc = acc - rows[i][j] * x[j]
        x[i] = acc / rows[i][i]
    return [det * value for value in x], det


def _quotient(numerator: Any, denominator: Any, kind: str) -> Any:
    if kind in (INTEGER, RATIONAL):
        return Fraction(numerator) / Fraction(denominator)
    if kind == LAURENT:
        return ratfun_reduce(lift(numerator, LAURENT), lift(denominator, LAURENT))
    return lift(numerator, RATFUN) / lift(denominator, RATFUN)


def inverse_bilinear(v: Sequence[Any], a: ExactMatrix, w: Sequence[Any]) -> Any:
    """
    Exact value of v A^-1 w^T from a single linear solve.

    Args:
        v: Row vector
        a: Square nonsingular matrix
        w: Row vector

    Returns:
        Fraction for integer/rational A, RationalFunction for Laurent/ratfun A

    Raises:
        DimensionMismatchError: If vector lengths differ from the size of A
        SingularMatrixError: If det(A) = 0
    """
    a.require_square()
    if len(v) != a.rows or len(w) != a.rows:
        raise DimensionMismatchError(
            f"Vectors of length {len(v)} and {len(w)} against a {a.rows}x{a.rows} matrix"
        )
    result_kind = RATIONAL if a.kind in (INTEGER, RATIONAL) else RATFUN
    if a.rows == 0:
        return zero_of(result_kind)
    adjugate_column, det = solve_exact(a, list(w))
    return _quotient(dot(list(v), adjugate_column), det, a.kind)


def inverse_matrix(a: ExactMatrix) -> ExactMatrix:
    """A^-1 over the fraction field of the entry kind."""
    a.require_square()
    n = a.rows
    columns = []
    for j in range(n):
        unit = [1 if i == j else 0 for i in range(n)]
        adjugate_column, det = solve_exact(a, unit)
        columns.append([_quotient(entry, det, a.kind) for entry in adjugate_column])
    return ExactMatrix.from_function(n, n, lambda i, j: columns[j][i])


def rank(a: ExactMatrix) -> int:
    """Rank over the fraction field of the entry kind."""
    kind = RATIONAL if a.kind in (INTEGER, RATIONAL) else RATFUN
    rows = [[lift(entry, kind) for entry in row] for row in a.to_lists()]
    result = 0
    for col in range(a.cols):
        pivot = next((r for r in range(result, a.rows) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[result], rows[pivot] = rows[pivot], rows[result]
        inverse = 1 / rows[result][col] if kind == RATIONAL else rows[result][col].inverse()
        for i in range(result + 1, a.rows):
            if rows[i][col] != 0:
                factor = rows[i][col] * inverse
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[result])]
        result += 1
    return result


def is_singular(a: ExactMatrix) -> bool:
    return det_exact(a) == 0


def to_rational_function(value: Any) -> RationalFunction:
    """Lift a Laurent polynomial or integer result to a RationalFunction."""
    return lift(value, RATFUN)
