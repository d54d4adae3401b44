"""
Lattice - Integer unimodular congruence splitting of symmetric matrices.
"""

from typing import List, Tuple

from ..errors import NotSymmetricError
from .matrix import INTEGER, ExactMatrix


def integer_row_echelon(a: ExactMatrix) -> Tuple[List[List[int]], List[List[int]], int]:
    """
    Integer row echelon form by Euclidean row operations.

    Returns:
        Tuple (E, V, rank) with V unimodular, V A = E and the last
        n - rank rows of E zero
    """
    rows = [[int(x) for x in row] for row in a.to_lists()]
    n = a.rows
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    r = 0
    for col in range(a.cols):
        if r == n:
            break
        while True:
            nonzero = [i for i in range(r, n) if rows[i][col] != 0]
            if not nonzero:
                break
            smallest = min(nonzero, key=lambda i: (abs(rows[i][col]), i))
            if smallest != r:
                rows[r], rows[smallest] = rows[smallest], rows[r]
                v[r], v[smallest] = v[smallest], v[r]
            done = True
            for i in range(r + 1, n):
                if rows[i][col] == 0:
                    continue
                q = rows[i][col] // rows[r][col]
                rows[i] = [x - q * y for x, y in zip(rows[i], rows[r])]
                v[i] = [x - q * y for x, y in zip(v[i], v[r])]
                if rows[i][col] != 0:
                    done = False
            if done:
                r += 1
                break
    return rows, v, r


def kernel_basis(a: ExactMatrix) -> List[List[int]]:
    """Basis of the integer left kernel {x : x A = 0}, saturated in Z^n."""
    _, v, r = integer_row_echelon(a)
    return v[r:]


def unimodular_split(a: ExactMatrix) -> Tuple[ExactMatrix, ExactMatrix]:
    """
    Split a symmetric integer matrix as P^T A P = B + 0 with P unimodular.

    Args:
        a: Symmetric integer matrix

    Returns:
        Tuple (P, B): P has det +-1, B is nonsingular of size rank(A); the
        kernel occupies the last columns of P

    Raises:
        NotSymmetricError: If A is not symmetric
    """
    a.require_square()
    if a.kind != INTEGER:
        raise NotSymmetricError("unimodular_split needs an integer matrix")
    if not a.is_symmetric():
        i, j = a.asymmetric_entries()[0]
        raise NotSymmetricError(f"Entry ({i}, {j}) differs from entry ({j}, {i})")
    _, v, r = integer_row_echelon(a)
    p = ExactMatrix(v, a.rows).transpose()
    reduced = a.congruence(p)
    b = reduced.submatrix(range(r), range(r))
    return p, b
