"""
Tests for exact matrices, elimination, forms and unimodular splitting.
"""

import random
from fractions import Fraction

import pytest

from src.errors import (
    DimensionMismatchError,
    NotSquareError,
    NotSymmetricError,
    SingularFormError,
    SingularMatrixError,
)
from src.exact import LaurentPolynomial, RootOfUnity, ratfun_reduce
from src.linalg import (
    ExactMatrix,
    SignatureTriple,
    alexander_matrix,
    ball_bilinear,
    det_exact,
    hermitian_signature_at_omega,
    inverse_bilinear,
    inverse_matrix,
    kernel_basis,
    rank,
    seifert_alexander_determinant,
    solve_exact,
    symmetric_signature,
    unimodular_split,
)
from src.moves import random_unimodular

T = LaurentPolynomial.t()


@pytest.fixture
def trefoil_alexander_matrix() -> ExactMatrix:
    return ExactMatrix([[1 - T, T], [-1, 1 - T]], 2)


class TestExactMatrix:
    def test_kind_is_joined(self):
        assert ExactMatrix([[1, 2], [3, 4]], 2).kind == "integer"
        assert ExactMatrix([[1, Fraction(1, 2)]], 2).kind == "rational"
        assert ExactMatrix([[1, T]], 2).kind == "laurent"

    def test_ragged_rows(self):
        with pytest.raises(DimensionMismatchError):
            ExactMatrix([[1, 2], [3]], 2)

    def test_products(self):
        a = ExactMatrix([[1, 2], [3, 4]], 2)
        assert a @ ExactMatrix.identity(2) == a
        assert a.transpose() == ExactMatrix([[1, 3], [2, 4]], 2)
        assert a.vector_product([1, 1]) == [4, 6]
        assert a.congruence(ExactMatrix([[0, 1], [1, 0]], 2)) == ExactMatrix([[4, 3], [2, 1]], 2)

    def test_block_diagonal(self):
        blocks = ExactMatrix.block_diagonal(ExactMatrix([[1]], 1), ExactMatrix([[2, 3], [3, 4]], 2))
        assert blocks.to_lists() == [[1, 0, 0], [0, 2, 3], [0, 3, 4]]

    def test_render(self):
        assert ExactMatrix([[1, Fraction(-1, 3)]], 2).render() == "[1, -1/3]"
        assert ExactMatrix.empty().render() == "[]"


class TestDeterminant:
    def test_laurent_determinant(self, trefoil_alexander_matrix):
        assert det_exact(trefoil_alexander_matrix) == LaurentPolynomial({0: 1, 1: -1, 2: 1})

    def test_empty_is_one(self):
        assert det_exact(ExactMatrix.empty()) == 1

    def test_rational_determinant(self):
        assert det_exact(ExactMatrix([[Fraction(1, 2), 1], [1, 4]], 2)) == 1

    def test_singular(self):
        assert det_exact(ExactMatrix([[2, 4], [1, 2]], 2)) == 0

    def test_not_square(self):
        with pytest.raises(NotSquareError):
            det_exact(ExactMatrix([[1, 2]], 2))

    def test_needs_row_swap(self):
        assert det_exact(ExactMatrix([[0, 1], [1, 0]], 2)) == -1

    def test_trefoil_three_fold_matrix(self):
        m3 = ExactMatrix([[-2, 1, 1, 0], [1, -2, -1, 1], [1, -1, -2, 1], [0, 1, 1, -2]], 4)
        assert det_exact(m3) == 4


class TestSolve:
    def test_inverse_bilinear_integer(self):
        a = ExactMatrix([[-2, 1], [1, -2]], 2)
        assert inverse_bilinear([1, 0], a, [1, 0]) == Fraction(-2, 3)
        assert inverse_bilinear([1, 0], a, [0, 1]) == Fraction(-1, 3)

    def test_inverse_bilinear_zero_vector(self):
        a = ExactMatrix([[5, 2], [2, 1]], 2)
        assert inverse_bilinear([0, 0], a, [3, -7]) == 0

    def test_inverse_bilinear_laurent(self, trefoil_alexander_matrix):
        value = inverse_bilinear([1, 0], trefoil_alexander_matrix, [1, 0])
        assert value == ratfun_reduce(1 - T, LaurentPolynomial({0: 1, 1: -1, 2: 1}))

    def test_singular_solve(self):
        with pytest.raises(SingularMatrixError):
            inverse_bilinear([1, 0], ExactMatrix([[1, 1], [1, 1]], 2), [1, 0])

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            inverse_bilinear([1], ExactMatrix([[1, 0], [0, 1]], 2), [1, 0])

    def test_solve_returns_adjugate_column(self):
        x, det = solve_exact(ExactMatrix([[2, 1], [1, 1]], 2), [1, 0])
        assert det == 1
        assert x == [1, -1]

    def test_inverse_matrix(self):
        a = ExactMatrix([[-2, 1], [1, -2]], 2)
        inverse = inverse_matrix(a)
        assert inverse == ExactMatrix(
            [[Fraction(-2, 3), Fraction(-1, 3)], [Fraction(-1, 3), Fraction(-2, 3)]], 2
        )
        assert a @ inverse == ExactMatrix.identity(2)

    def test_rank(self):
        assert rank(ExactMatrix([[1, 2], [2, 4]], 2)) == 1
        assert rank(ExactMatrix.zeros(3, 3)) == 0
        assert rank(ExactMatrix([[1, 0], [0, 1]], 2)) == 2

    @pytest.mark.parametrize("seed", range(20))
    def test_inverse_identity_random(self, seed):
        rng = random.Random(seed)
        n = rng.randint(1, 6)
        a = ExactMatrix.zeros(n, n)
        while det_exact(a) == 0:
            a = ExactMatrix.from_function(
                n, n, lambda i, j: Fraction(rng.randint(-4, 4), rng.randint(1, 3))
            )
        inverse = inverse_matrix(a)
        assert a @ inverse == ExactMatrix.identity(n)
        assert inverse @ a == ExactMatrix.identity(n)


class TestForms:
    @pytest.mark.parametrize(
        "rows, expected",
        [
            ([[-2, 1], [1, -2]], SignatureTriple(0, 2, 0)),
            ([[0, 1], [1, 0]], SignatureTriple(1, 1, 0)),
            ([[1, 1], [1, 1]], SignatureTriple(1, 0, 1)),
            ([[2, 1], [1, -2]], SignatureTriple(1, 1, 0)),
        ],
    )
    def test_symmetric_signature(self, rows, expected):
        assert symmetric_signature(ExactMatrix(rows, len(rows))) == expected

    @pytest.mark.parametrize("seed", range(20))
    def test_symmetric_signature_congruence_invariance(self, seed):
        rng = random.Random(seed)
        n = rng.randint(2, 6)
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                rows[i][j] = rows[j][i] = rng.randint(-3, 3)
        a = ExactMatrix(rows, n)
        p = random_unimodular(rng, n, steps=2 * n)
        assert det_exact(p) in (1, -1)
        assert symmetric_signature(a.congruence(p)) == symmetric_signature(a)

    def test_symmetric_signature_empty(self):
        assert symmetric_signature(ExactMatrix.empty()) == SignatureTriple(0, 0, 0)

    def test_symmetric_signature_rejects_asymmetric(self):
        with pytest.raises(NotSymmetricError):
            symmetric_signature(ExactMatrix([[1, 2], [0, 1]], 2))

    def test_alexander_matrix(self, trefoil_matrix, trefoil_alexander_matrix):
        assert alexander_matrix(trefoil_matrix) == trefoil_alexander_matrix
        assert seifert_alexander_determinant(ExactMatrix.empty()) == 1

    def test_hermitian_signature_at_minus_one(self, trefoil_matrix, figure_eight_matrix, minus_one):
        assert hermitian_signature_at_omega(trefoil_matrix, minus_one) == SignatureTriple(0, 2, 0)
        figure_eight = hermitian_signature_at_omega(figure_eight_matrix, minus_one)
        assert figure_eight == SignatureTriple(1, 1, 0)
        empty = hermitian_signature_at_omega(ExactMatrix.empty(), minus_one)
        assert empty == SignatureTriple(0, 0, 0)

    def test_hermitian_signature_interval_path(self, trefoil_matrix):
        # e^(2 pi i / 3): |1 - w|^2 = 3, sigma = -2 until the root at 1/6
        assert hermitian_signature_at_omega(trefoil_matrix, RootOfUnity(1, 3)).signature == -2
        assert hermitian_signature_at_omega(trefoil_matrix, RootOfUnity(1, 12)).signature == 0

    def test_hermitian_signature_singular(self, trefoil_matrix):
        with pytest.raises(SingularFormError):
            hermitian_signature_at_omega(trefoil_matrix, RootOfUnity(1, 6))

    def test_ball_bilinear(self, trefoil_matrix, minus_one):
        value = ball_bilinear([1, 0], trefoil_matrix, [1, 0], minus_one)
        assert value.contains(Fraction(-1, 3))
        assert ball_bilinear([0, 0], trefoil_matrix, [1, 0], minus_one).contains(0)


class TestLattice:
    def test_split_permutation(self):
        p, b = unimodular_split(ExactMatrix([[0, 0], [0, 3]], 2))
        assert p == ExactMatrix([[0, 1], [1, 0]], 2)
        assert b == ExactMatrix([[3]], 1)

    def test_split_by_hand(self):
        a = ExactMatrix([[2, 2], [2, 2]], 2)
        p, b = unimodular_split(a)
        assert p == ExactMatrix([[1, -1], [0, 1]], 2)
        assert b == ExactMatrix([[2]], 1)
        assert a.congruence(p) == ExactMatrix([[2, 0], [0, 0]], 2)

    def test_split_zero(self):
        p, b = unimodular_split(ExactMatrix.zeros(2, 2))
        assert p == ExactMatrix.identity(2)
        assert b.rows == 0

    def test_split_nonsingular_keeps_everything(self):
        a = ExactMatrix([[2, 1, 0], [1, 2, 1], [0, 1, 2]], 3)
        p, b = unimodular_split(a)
        assert det_exact(p) in (1, -1)
        assert b.rows == 3
        assert det_exact(b) == det_exact(a)

    def test_split_rejects_asymmetric(self):
        with pytest.raises(NotSymmetricError):
            unimodular_split(ExactMatrix([[1, 2], [0, 1]], 2))

    def test_kernel_basis(self):
        kernel = kernel_basis(ExactMatrix([[2, 2], [2, 2]], 2))
        assert kernel == [[-1, 1]]
