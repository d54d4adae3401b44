"""
Tests for classical invariants and crossing-change identities.
"""

from fractions import Fraction

import pytest

from src.data import GoeritzData
from src.errors import (
    DimensionMismatchError,
    InvalidSpecError,
    MissingEulerNumberError,
    OmegaIsAlexanderRootError,
)
from src.exact import LaurentPolynomial, RootOfUnity, equal_up_to_unit
from src.invariants import (
    CrossingChangeSpec,
    alexander,
    conway,
    conway_at_omega,
    conway_ratio_identity,
    conway_to_alexander,
    crossing_change_alexander,
    crossing_change_goeritz,
    crossing_change_seifert,
    crossing_change_signature,
    crossing_change_signature_unoriented,
    goeritz_disk_lambda,
    goeritz_signature,
    signature_phase,
    tristram_levine,
)
from src.linalg import ExactMatrix


@pytest.fixture
def first_curve() -> CrossingChangeSpec:
    return CrossingChangeSpec(v=(1, 0), n=1)


class TestClassical:
    def test_alexander(self, trefoil_matrix, figure_eight_matrix, trefoil_delta):
        assert alexander(trefoil_matrix) == trefoil_delta
        assert alexander(figure_eight_matrix) == LaurentPolynomial({0: -1, 1: 3, 2: -1})
        assert alexander(ExactMatrix.empty()) == 1

    def test_conway(self, trefoil_matrix, figure_eight_matrix):
        assert conway(trefoil_matrix).render("z") == "1 + z^2"
        assert conway(figure_eight_matrix) == LaurentPolynomial({0: 1, 2: -1})
        assert conway(ExactMatrix.empty()) == 1

    def test_conway_to_alexander(self, trefoil_matrix, trefoil_delta):
        assert equal_up_to_unit(conway_to_alexander(conway(trefoil_matrix)), trefoil_delta)

    def test_tristram_levine(self, trefoil_matrix, figure_eight_matrix, minus_one):
        assert tristram_levine(trefoil_matrix, minus_one) == -2
        assert tristram_levine(figure_eight_matrix, minus_one) == 0

    def test_tristram_levine_at_a_root(self, trefoil_matrix):
        with pytest.raises(OmegaIsAlexanderRootError):
            tristram_levine(trefoil_matrix, RootOfUnity(1, 6))

    def test_signature_phase(self, trefoil_matrix, figure_eight_matrix, minus_one):
        # i^-2 = -1 and i^0 = 1
        assert signature_phase(trefoil_matrix, minus_one) == -1
        assert signature_phase(figure_eight_matrix, minus_one) == 1
        assert conway_at_omega(trefoil_matrix, minus_one).contains(-3)

    def test_goeritz_signature(self, trefoil_goeritz):
        assert goeritz_signature(trefoil_goeritz) == -2
        assert goeritz_signature(GoeritzData.build([[1]], euler_number=-2)) == 0
        assert goeritz_signature(GoeritzData.build([[3]], euler_number=-6)) == -2

    def test_goeritz_signature_needs_euler_number(self):
        with pytest.raises(MissingEulerNumberError):
            goeritz_signature(GoeritzData.build([[3]]))


class TestCrossingChangeSpec:
    @pytest.mark.parametrize(
        "kwargs",
        [
            {"v": (1,), "n": 0},
            {"v": (1,), "n": 1, "epsilon": 2},
            {"v": (1,), "n": 1, "disk_link": -1},
        ],
    )
    def test_rejects(self, kwargs):
        with pytest.raises(InvalidSpecError):
            CrossingChangeSpec(**kwargs)

    def test_oriented_needs_zero_disk_link(self, trefoil_matrix):
        with pytest.raises(InvalidSpecError):
            crossing_change_seifert(trefoil_matrix, CrossingChangeSpec(v=(1, 0), n=1, disk_link=2))

    def test_size_mismatch(self, trefoil_matrix):
        with pytest.raises(DimensionMismatchError):
            crossing_change_alexander(trefoil_matrix, CrossingChangeSpec(v=(1,), n=1))


class TestOrientedCrossingChange:
    def test_seifert_matrix(self, trefoil_matrix, first_curve):
        changed = crossing_change_seifert(trefoil_matrix, first_curve)
        assert changed.to_lists() == [
            [0, 1, 1, 0],
            [0, -1, 0, 0],
            [0, 0, -1, 1],
            [0, 0, 0, -1],
        ]

    def test_seifert_matrix_of_the_unknot(self):
        changed = crossing_change_seifert(ExactMatrix.empty(), CrossingChangeSpec(v=(), n=1))
        assert changed == ExactMatrix([[0, 1], [0, -1]], 2)

    def test_alexander_two_ways(self, trefoil_matrix, first_curve):
        predicted = crossing_change_alexander(trefoil_matrix, first_curve)
        assert predicted == LaurentPolynomial({0: 2, 1: -3, 2: 2})
        assert predicted == alexander(crossing_change_seifert(trefoil_matrix, first_curve))

    def test_alexander_negative_twist(self, trefoil_matrix):
        # Delta - (1 - t)^2 = t
        spec = CrossingChangeSpec(v=(1, 0), n=-1)
        assert crossing_change_alexander(trefoil_matrix, spec) == 1
        assert alexander(crossing_change_seifert(trefoil_matrix, spec)) == 1

    @pytest.mark.parametrize(
        "n, expected",
        [
            (1, {0: 1}),
            (-1, {0: -2, 1: 5, 2: -2}),
        ],
    )
    def test_alexander_figure_eight(self, figure_eight_matrix, n, expected):
        # (-1 + 3t - t^2) + n (1 - t)^2
        spec = CrossingChangeSpec(v=(1, 0), n=n)
        predicted = crossing_change_alexander(figure_eight_matrix, spec)
        assert predicted == LaurentPolynomial(expected)
        assert predicted == alexander(crossing_change_seifert(figure_eight_matrix, spec))

    def test_alexander_of_the_unknot_is_unchanged(self):
        assert crossing_change_alexander(ExactMatrix.empty(), CrossingChangeSpec(v=(), n=3)) == 1

    def test_signature_two_ways(self, trefoil_matrix, first_curve, minus_one):
        predicted = crossing_change_signature(trefoil_matrix, first_curve, minus_one)
        assert predicted == -2
        changed = crossing_change_seifert(trefoil_matrix, first_curve)
        assert tristram_levine(changed, minus_one) == predicted

    def test_conway_ratio(self, trefoil_matrix, first_curve, minus_one):
        # nabla_K(2i) = -3 and nabla_Kn(2i) = -7
        ratio = conway_ratio_identity(trefoil_matrix, first_curve, minus_one)
        assert ratio.lhs.contains(Fraction(-4, 3))
        assert ratio.rhs.contains(Fraction(-4, 3))
        assert ratio.ratio_sign == 1

    def test_conway_ratio_figure_eight(self, figure_eight_matrix, first_curve, minus_one):
        # lambda(-1) = -2/5, nabla_K(2i) = 5 and the changed knot has nabla = 1
        ratio = conway_ratio_identity(figure_eight_matrix, first_curve, minus_one)
        assert ratio.lhs.contains(Fraction(4, 5))
        assert ratio.rhs.contains(Fraction(4, 5))
        assert ratio.ratio_sign == 1
        predicted = crossing_change_signature(figure_eight_matrix, first_curve, minus_one)
        assert predicted == 0
        changed = crossing_change_seifert(figure_eight_matrix, first_curve)
        assert tristram_levine(changed, minus_one) == 0


class TestUnorientedCrossingChange:
    def test_goeritz_matrix(self, trefoil_goeritz, first_curve):
        changed = crossing_change_goeritz(trefoil_goeritz, first_curve)
        assert changed.matrix.to_lists() == [
            [0, 1, 1, 0],
            [1, -2, 0, 0],
            [1, 0, -2, 1],
            [0, 0, 1, -2],
        ]
        assert changed.euler_number == 0
        assert changed.components == {}

    def test_euler_number_moves_with_disk_link(self, trefoil_goeritz):
        spec = CrossingChangeSpec(v=(1, 0), n=-1, disk_link=2)
        assert crossing_change_goeritz(trefoil_goeritz, spec).euler_number == -4

    def test_signature_two_ways(self, trefoil_goeritz, first_curve):
        predicted = crossing_change_signature_unoriented(trefoil_goeritz, first_curve)
        assert predicted == -2
        assert goeritz_signature(crossing_change_goeritz(trefoil_goeritz, first_curve)) == predicted

    def test_disk_lambda(self, trefoil_goeritz, first_curve):
        assert goeritz_disk_lambda(trefoil_goeritz, first_curve) == Fraction(-2, 3)

    def test_needs_euler_number(self, first_curve):
        data = GoeritzData.build([[-2, 1], [1, -2]])
        with pytest.raises(MissingEulerNumberError):
            crossing_change_goeritz(data, first_curve)
