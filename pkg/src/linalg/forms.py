"""
Forms - Signatures of symmetric and Hermitian forms, certified complex solves.

Symmetric rational forms are diagonalized exactly by congruence. The
Hermitian forms (1 - conj(w)) M + (1 - w) M^T are reduced in interval
arithmetic with certified nonzero pivots; singularity itself is decided
exactly from the Alexander polynomial before any numerics start.
"""

from fractions import Fraction
from typing import Any, List, Optional, Sequence

from ..errors import NotSymmetricError, NumericallyUncertainError, SingularFormError
from ..exact import LaurentPolynomial, RootOfUnity, cyclotomic_vanishes
from ..exact.balls import (
    DEFAULT_PRECISION,
    ComplexApprox,
    certified_sign,
    escalate,
    interval_context,
    iv_conjugate,
    iv_root_of_unity,
    lower,
)
from ..logger import get_logger
from .elimination import det_exact
from .matrix import RATIONAL, ExactMatrix, SignatureTriple, lift

logger = get_logger()


def symmetric_signature(a: ExactMatrix) -> SignatureTriple:
    """
    Exact inertia of a symmetric rational matrix.

    Raises:
        NotSymmetricError: If the matrix is not symmetric
    """
    a.require_square()
    asymmetric = a.asymmetric_entries()
    if asymmetric:
        i, j = asymmetric[0]
        raise NotSymmetricError(f"Entry ({i}, {j}) differs from entry ({j}, {i})")

    m: List[List[Fraction]] = [[lift(x, RATIONAL) for x in row] for row in a.to_lists()]
    positives = negatives = 0
    while m:
        size = len(m)
        pivot = next((i for i in range(size) if m[i][i] != 0), None)
        if pivot is None:
            pair = next(
                ((i, j) for i in range(size) for j in range(i + 1, size) if m[i][j] != 0),
                None,
            )
            if pair is None:
                break
            # e_i -> e_i + e_j makes the diagonal entry 2 m_ij.
            i, j = pair
            for k in range(size):
                m[k][i] += m[k][j]
            for k in range(size):
                m[i][k] += m[j][k]
            pivot = i
        d = m[pivot][pivot]
        if d > 0:
            positives += 1
        else:
            negatives += 1
        rest = [k for k in range(size) if k != pivot]
        m = [
            [m[r][c] - m[r][pivot] * m[pivot][c] / d for c in rest]
            for r in rest
        ]
    zeros = a.rows - positives - negatives
    return SignatureTriple(positives, negatives, zeros)


def alexander_matrix(m: ExactMatrix) -> ExactMatrix:
    """G(t) = t M - M^T over Z[t, 1/t]."""
    t = LaurentPolynomial.t()
    return m.map(lambda e: t * e) - m.transpose().lift_to("laurent")


def seifert_alexander_determinant(m: ExactMatrix) -> LaurentPolynomial:
    """det(t M - M^T) without normalization."""
    if m.rows == 0:
        return LaurentPolynomial.constant(1)
    return det_exact(alexander_matrix(m))


def omega_form_is_singular(m: ExactMatrix, omega: RootOfUnity) -> bool:
    """True iff (1 - conj(w)) M + (1 - w) M^T is singular."""
    if m.rows == 0:
        return False
    return cyclotomic_vanishes(seifert_alexander_determinant(m), omega)


def iv_omega_form(ctx: Any, m: ExactMatrix, omega: RootOfUnity) -> List[List[Any]]:
    """Interval enclosure of (1 - conj(w)) M + (1 - w) M^T."""
    w = iv_root_of_unity(ctx, omega)
    a = 1 - iv_conjugate(w)
    b = 1 - w
    n = m.rows
    return [
        [a * ctx.mpf(int(m[i, j])) + b * ctx.mpf(int(m[j, i])) for j in range(n)] for i in range(n)
    ]


_ROTATIONS = ((1, 0), (-1, 0), (0, 1), (0, -1))


def _iv_hermitian_inertia(ctx: Any, h: List[List[Any]]) -> Optional[SignatureTriple]:
    positives = negatives = 0
    h = [row[:] for row in h]
    while h:
        size = len(h)
        pivot = None
        best_mig = None
        for i in range(size):
            if certified_sign(h[i][i].real) is None:
                continue
            mig = lower(abs(h[i][i].real))
            if best_mig is None or mig > best_mig:
                pivot, best_mig = i, mig
        if pivot is None:
            pivot = _rotate_into_pivot(ctx, h)
            if pivot is None:
                return None
        sign = certified_sign(h[pivot][pivot].real)
        if sign is None:
            return None
        if sign > 0:
            positives += 1
        else:
            negatives += 1
        d = ctx.mpc(h[pivot][pivot].real, 0)
        rest = [k for k in range(size) if k != pivot]
        h = [[h[r][c] - h[r][pivot] * h[pivot][c] / d for c in rest] for r in rest]
    return SignatureTriple(positives, negatives, 0)


def _rotate_into_pivot(ctx: Any, h: List[List[Any]]) -> Optional[int]:
    """Replace e_i by e_i + c e_j (c a fourth root of unity) to get a certified pivot."""
    size = len(h)
    for i in range(size):
        for j in range(size):
            if i == j or 0 in h[i][j]:
                continue
            for re, im in _ROTATIONS:
                c = ctx.mpc(re, im)
                candidate = h[i][i] + h[j][j] + c * h[i][j] + iv_conjugate(c) * h[j][i]
                if certified_sign(candidate.real) is None:
                    continue
                logger.debug(f"Hermitian pivot by rotation ({i}, {j}) with c = {re}+{im}i")
                for k in range(size):
                    h[k][i] = h[k][i] + c * h[k][j]
                for k in range(size):
                    h[i][k] = h[i][k] + iv_conjugate(c) * h[j][k]
                return i
    return None


def hermitian_signature_at_omega(
    m: ExactMatrix,
    omega: RootOfUnity,
    precision_bits: int = DEFAULT_PRECISION,
    precision_cap: Optional[int] = None,
) -> SignatureTriple:
    """
    Inertia of (1 - conj(w)) M + (1 - w) M^T for an integer matrix M.

    Args:
        m: Square integer matrix
        omega: Root of unity
        precision_bits: Starting precision
        precision_cap: Escalation cap

    Returns:
        Signature triple with zero nullity

    Raises:
        SingularFormError: If the form is singular
        NumericallyUncertainError: If no pivot can be certified up to the cap
    """
    m.require_square()
    if m.rows == 0:
        return SignatureTriple(0, 0, 0)
    if omega.is_minus_one():
        triple = symmetric_signature((m + m.transpose()).scale(2))
        if triple.zeros:
            raise SingularFormError(f"The form at {omega} is singular")
        return triple
    if omega_form_is_singular(m, omega):
        raise SingularFormError(f"The form at {omega} is singular")

    def attempt(bits: int) -> Optional[SignatureTriple]:
        ctx = interval_context(bits)
        return _iv_hermitian_inertia(ctx, iv_omega_form(ctx, m, omega))

    triple = escalate(attempt, precision_bits, precision_cap)
    if triple is None:
        raise NumericallyUncertainError(f"Cannot certify the Hermitian pivots at {omega}")
    return triple


def iv_bilinear(ctx: Any, v: Sequence[int], h: List[List[Any]], w: Sequence[int]) -> Optional[Any]:
    """
    Enclosure of v H^-1 w^T by Gaussian elimination with mignitude pivoting.

    Returns:
        Complex interval, or None when no pivot can be separated from 0
    """
    n = len(h)
    rows = [row[:] + [ctx.mpc(int(w[i]), 0)] for i, row in enumerate(h)]
    for k in range(n):
        best = None
        best_mig = None
        for r in range(k, n):
            mig = lower(abs(rows[r][k]))
            if mig > 0 and (best_mig is None or mig > best_mig):
                best, best_mig = r, mig
        if best is None:
            return None
        rows[k], rows[best] = rows[best], rows[k]
        for i in range(k + 1, n):
            factor = rows[i][k] / rows[k][k]
            for j in range(k, n + 1):
                rows[i][j] = rows[i][j] - factor * rows[k][j]
    x: List[Any] = [None] * n
    for i in range(n - 1, -1, -1):
        acc = rows[i][n]
        for j in range(i + 1, n):
            acc = acc - rows[i][j] * x[j]
        x[i] = acc / rows[i][i]
    total = ctx.mpc(0, 0)
    for coefficient, value in zip(v, x):
        if coefficient:
            total = total + ctx.mpf(int(coefficient)) * value
    return total


def ball_bilinear(
    v: Sequence[int],
    m: ExactMatrix,
    w: Sequence[int],
    omega: RootOfUnity,
    precision_bits: int = DEFAULT_PRECISION,
    precision_cap: Optional[int] = None,
) -> ComplexApprox:
    """
    Certified v G^-1 w^T for G = (1 - conj(w)) M + (1 - w) M^T.

    Raises:
        SingularFormError: If G is singular
        NumericallyUncertainError: If the elimination cannot be certified up to the cap
    """
    m.require_square()
    if m.rows == 0 or not any(v) or not any(w):
        return ComplexApprox.from_integer(0, precision_bits)
    if omega_form_is_singular(m, omega):
        raise SingularFormError(f"The form at {omega} is singular")

    def attempt(bits: int) -> Optional[ComplexApprox]:
        ctx = interval_context(bits)
        value = iv_bilinear(ctx, v, iv_omega_form(ctx, m, omega), w)
        return None if value is None else ComplexApprox.from_interval(value, bits)

    result = escalate(attempt, precision_bits, precision_cap)
    if result is None:
        raise NumericallyUncertainError(f"Cannot certify the linear solve at {omega}")
    return result
