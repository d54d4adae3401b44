"""
Tests for surface stabilizations and the seeded random generators.
"""

import random
from fractions import Fraction

import pytest

from src.covers import goeritz_lambda, seifert_lambda_t
from src.data import GoeritzData, SeifertData
from src.errors import DimensionMismatchError, InvalidInputError, InvalidSpecError
from src.exact import equal_up_to_unit
from src.invariants import alexander, goeritz_signature
from src.linalg import ExactMatrix, det_exact
from src.moves import (
    EnlargementSeifert,
    HalfTwistBand,
    HollowHandleGoeritz,
    destabilize_goeritz,
    destabilize_seifert,
    random_crossing_spec,
    random_goeritz_data,
    random_seifert_data,
    random_seifert_matrix,
    stab_goeritz,
    stab_seifert,
)


@pytest.fixture
def two_goeritz() -> GoeritzData:
    return GoeritzData.build([[2]], components={"K1": [1]}, euler_number=0)


class TestGoeritzMoves:
    def test_half_twist_band(self, two_goeritz):
        stabilized = stab_goeritz(two_goeritz, HalfTwistBand(1))
        assert stabilized.matrix == ExactMatrix([[1, 0], [0, 2]], 2)
        assert stabilized.vector("K1") == (0, 1)
        assert stabilized.euler_number == -2
        assert goeritz_lambda(stabilized, "K1", "K1") == Fraction(1, 2)
        assert goeritz_signature(stabilized) == goeritz_signature(two_goeritz)

    def test_hollow_handle_on_the_disk(self):
        disk = GoeritzData.build(ExactMatrix.empty(), components={"K1": []}, euler_number=0)
        stabilized = stab_goeritz(disk, HollowHandleGoeritz(x=7, b_links={"K1": 3}))
        assert stabilized.matrix == ExactMatrix([[0, 1], [1, 7]], 2)
        assert stabilized.vector("K1") == (0, 3)
        assert goeritz_lambda(stabilized, "K1", "K1") == 0

    def test_hollow_handle_keeps_lambda(self, small_goeritz):
        step = HollowHandleGoeritz(x=-4, xs=(2,), b_links={"K1": 1, "K2": -3})
        stabilized = stab_goeritz(small_goeritz, step)
        assert goeritz_lambda(stabilized, "K1", "K2") == goeritz_lambda(small_goeritz, "K1", "K2")

    def test_border_length(self, small_goeritz):
        with pytest.raises(DimensionMismatchError):
            stab_goeritz(small_goeritz, HollowHandleGoeritz(x=0, xs=(1, 2)))

    def test_destabilize_round_trip(self, small_goeritz):
        for step in (HalfTwistBand(-1), HollowHandleGoeritz(x=1, xs=(5,), b_links={"K2": 2})):
            assert destabilize_goeritz(stab_goeritz(small_goeritz, step), step) == small_goeritz

    def test_destabilize_wrong_step(self, small_goeritz):
        stabilized = stab_goeritz(small_goeritz, HalfTwistBand(1))
        with pytest.raises(InvalidInputError):
            destabilize_goeritz(stabilized, HalfTwistBand(-1))

    def test_half_twist_sign(self):
        with pytest.raises(InvalidSpecError):
            HalfTwistBand(2)


class TestSeifertMoves:
    @pytest.fixture
    def enlargement(self) -> EnlargementSeifert:
        return EnlargementSeifert(
            theta=(1, 0), x=5, rho=(2, -1), xi=(0, 3), b_links={"K1": 4, "K2": -1}
        )

    def test_enlargement_keeps_pairings(self, trefoil, enlargement):
        enlarged = stab_seifert(trefoil, enlargement)
        assert enlarged.size == 4
        assert enlarged.vector("K1") == (0, 4, 1, 0)
        for i, j in (("K1", "K1"), ("K1", "K2"), ("K2", "K2")):
            assert seifert_lambda_t(enlarged, i, j) == seifert_lambda_t(trefoil, i, j)
        assert equal_up_to_unit(alexander(enlarged.matrix), alexander(trefoil.matrix))

    def test_enlarging_the_disk(self):
        disk = SeifertData.build(ExactMatrix.empty())
        enlarged = stab_seifert(disk, EnlargementSeifert(theta=(0, 1), x=3))
        assert enlarged.matrix == ExactMatrix([[0, 0], [1, 3]], 2)
        assert alexander(enlarged.matrix) == 1

    def test_destabilize_round_trip(self, trefoil, enlargement):
        assert destabilize_seifert(stab_seifert(trefoil, enlargement), enlargement) == trefoil

    def test_destabilize_too_small(self):
        with pytest.raises(InvalidInputError):
            destabilize_seifert(
                SeifertData.build(ExactMatrix.empty()), EnlargementSeifert(theta=(1, 0), x=0)
            )

    def test_theta_variants(self):
        with pytest.raises(InvalidSpecError):
            EnlargementSeifert(theta=(1, 1), x=0)

    def test_goeritz_step_is_not_a_seifert_move(self, trefoil):
        with pytest.raises(InvalidSpecError):
            stab_seifert(trefoil, HalfTwistBand(1))


class TestRandomGenerators:
    @pytest.mark.parametrize("seed", range(5))
    def test_random_seifert_matrix_is_valid(self, seed):
        m = random_seifert_matrix(random.Random(seed), genus=2)
        assert m.rows == 4
        assert det_exact(m - m.transpose()) in (1, -1)

    def test_random_data_is_reproducible(self):
        assert random_seifert_data(random.Random(7)) == random_seifert_data(random.Random(7))

    @pytest.mark.parametrize("seed", range(5))
    def test_random_goeritz_is_nonsingular(self, seed):
        data = random_goeritz_data(random.Random(seed))
        assert det_exact(data.matrix) != 0
        assert data.euler_number % 2 == 0

    def test_random_crossing_spec(self):
        spec = random_crossing_spec(random.Random(3), 4)
        assert len(spec.v) == 4
        assert spec.n != 0
        assert spec.disk_link == 0
