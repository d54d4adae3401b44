"""
Surgery - Linking numbers after Dehn surgery and filling.

The correction to an ambient linking number is -v1 G^-1 v2^T for the
(surgery-)linking matrix G. Degenerate linking matrices are first split as
P^T G P = B + 0 over the integers; satellites must then pair trivially with
the zero block.
"""

from fractions import Fraction
from math import lcm
from typing import List, Sequence, Tuple

from .data import FillingSlopes, FramedLinkData
from .errors import NotSymmetricError, SingularMatrixError
from .linalg import ExactMatrix, det_exact, inverse_bilinear, inverse_matrix, unimodular_split
from .logger import get_logger

logger = get_logger()


def surgery_lk_delta(g: ExactMatrix, v1: Sequence[int], v2: Sequence[int]) -> Fraction:
    """
    Correction lk_M(K1, K2) - lk_S3(K1, K2) = -v1 G^-1 v2^T.

    Args:
        g: Symmetric nonsingular linking matrix
        v1: Linking vector of K1 against the surgery link
        v2: Linking vector of K2 against the surgery link

    Returns:
        Exact correction term

    Raises:
        NotSymmetricError: If G is not symmetric
        SingularMatrixError: If G is singular
    """
    g.require_square()
    if not g.is_symmetric():
        i, j = g.asymmetric_entries()[0]
        raise NotSymmetricError(f"Linking matrix entry ({i}, {j}) differs from ({j}, {i})")
    if g.rows == 0:
        return Fraction(0)
    return -Fraction(inverse_bilinear(v1, g, v2))


def reduce_linking_matrix(g: ExactMatrix) -> Tuple[ExactMatrix, ExactMatrix, int]:
    """
    Split a rational symmetric linking matrix into a nonsingular block and a zero block.

    Denominators are cleared by their lcm L, the integer matrix L*G is split
    unimodularly and the block is scaled back.

    Returns:
        Tuple (P, B, corank) with P unimodular and P^T G P = B + 0
    """
    scale = 1
    for entry in g.entries:
        scale = lcm(scale, Fraction(entry).denominator)
    integral = g.map(lambda e: int(Fraction(e) * scale))
    p, b = unimodular_split(integral)
    logger.debug(f"Linking matrix split: rank {b.rows}, corank {g.rows - b.rows}")
    return p, b.map(lambda e: Fraction(e, scale)), g.rows - b.rows


def _split_vector(vector: Sequence[int], p: ExactMatrix, rank: int, name: str) -> List[int]:
    image = p.vector_product(list(vector))
    if any(image[rank:]):
        raise SingularMatrixError(
            f"'{name}' pairs nontrivially with the kernel of the linking matrix; "
            "it does not represent a torsion class"
        )
    return [int(x) for x in image[:rank]]


def lk_in_surgered_manifold(data: FramedLinkData, pair: Tuple[str, str]) -> Fraction:
    """
    Linking number of two satellites in the surgered manifold.

    A pair of equal labels needs an explicit ambient self-pairing entry,
    i.e. a chosen parallel copy.

    Raises:
        MissingAmbientLkError: If the ambient linking number is absent
        SingularMatrixError: If a satellite meets the kernel of a degenerate matrix
    """
    first, second = pair
    v1 = data.vector(first)
    v2 = data.vector(second)
    ambient = data.require_ambient(first, second)
    g = data.linking_matrix

    if g.rows == 0 or det_exact(g) != 0:
        return ambient + surgery_lk_delta(g, v1, v2)

    p, b, corank = reduce_linking_matrix(g)
    rank = b.rows
    logger.debug(f"Degenerate linking matrix (corank {corank}); using the nonsingular block")
    w1 = _split_vector(v1, p, rank, first)
    w2 = _split_vector(v2, p, rank, second)
    return ambient + surgery_lk_delta(b, w1, w2)


def surgery_duality(slopes: FillingSlopes) -> Tuple[ExactMatrix, ExactMatrix]:
    """
    Surgery-linking matrices G = Q^-1 B and H = -Q^-1 B^-1.

    Returns:
        Tuple (G, H) satisfying B = Q G and B^-1 = -Q H

    Raises:
        SingularMatrixError: If B is singular
    """
    b = slopes.b
    if b.rows and det_exact(b) == 0:
        raise SingularMatrixError("The change-of-basis matrix B is singular")
    q_inverse = ExactMatrix.from_function(
        b.rows, b.rows, lambda i, j: 1 / Fraction(slopes.q[i]) if i == j else 0
    )
    g = q_inverse @ b
    h = -(q_inverse @ inverse_matrix(b))
    q = slopes.q_matrix
    if q @ g != b or -(q @ h) != inverse_matrix(b):
        raise ArithmeticError("Surgery duality identities failed")
    return g, h


def filling_lk_delta(slopes: FillingSlopes, v1: Sequence[int], v2: Sequence[int]) -> Fraction:
    """lk after the delta filling minus lk after the mu filling: -v1 G^-1 v2^T with G = Q^-1 B."""
    g, _ = surgery_duality(slopes)
    if g.rows == 0:
        return Fraction(0)
    return -Fraction(inverse_bilinear(v1, g, v2))
