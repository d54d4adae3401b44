"""
Tests for the typed input data and their invariants.
"""

from fractions import Fraction

import pytest

from src.data import FillingSlopes, FramedLinkData, GoeritzData, SeifertData, pair_key
from src.errors import InvariantViolationError, MissingAmbientLkError, UnknownComponentError
from src.linalg import ExactMatrix


def test_pair_key_is_unordered():
    assert pair_key("K2", "K1") == pair_key("K1", "K2") == ("K1", "K2")


class TestSeifertData:
    def test_trefoil(self, trefoil):
        assert trefoil.size == 2
        assert trefoil.vector("K1") == (1, 0)
        assert trefoil.require_ambient("K2", "K1") == 0
        assert trefoil.names == ["K1", "K2"]

    def test_empty_matrix_is_the_disk(self):
        disk = SeifertData.build(ExactMatrix.empty(), components={"K": []})
        assert disk.size == 0

    def test_odd_size_is_rejected(self):
        with pytest.raises(InvariantViolationError, match="M - M\\^T singular"):
            SeifertData.build([[1]])

    def test_non_unimodular_skew_part(self):
        with pytest.raises(InvariantViolationError, match="not unimodular"):
            SeifertData.build([[0, 2], [0, 0]])

    def test_all_violations_are_reported(self):
        with pytest.raises(InvariantViolationError) as excinfo:
            SeifertData.build(
                [[-1, 1], [0, -1]],
                components={"K1": [1, 0, 0]},
                ambient_lk={("K1", "K9"): 1},
            )
        assert len(excinfo.value.violations) == 2

    def test_unknown_component(self, trefoil):
        with pytest.raises(UnknownComponentError):
            trefoil.vector("K3")

    def test_missing_ambient(self):
        data = SeifertData.build([[-1, 1], [0, -1]], components={"K1": [1, 0], "K2": [0, 1]})
        assert data.ambient("K1", "K2") is None
        with pytest.raises(MissingAmbientLkError):
            data.require_ambient("K1", "K2")


class TestGoeritzData:
    def test_asymmetric_is_located(self):
        with pytest.raises(InvariantViolationError, match="\\(0, 1\\)"):
            GoeritzData.build([[1, 2], [3, 1]])

    def test_odd_euler_number(self):
        with pytest.raises(InvariantViolationError, match="odd"):
            GoeritzData.build([[3]], euler_number=-3)

    def test_euler_number_is_optional(self):
        assert GoeritzData.build([[3]]).euler_number is None


class TestFramedLinkData:
    def test_rational_framings(self):
        data = FramedLinkData.build([[Fraction(3, 2), 1], [1, -2]])
        assert data.surgery_names == ("J1", "J2")

    def test_off_diagonal_must_be_integral(self):
        with pytest.raises(InvariantViolationError, match="off-diagonal"):
            FramedLinkData.build([[1, Fraction(1, 2)], [Fraction(1, 2), 1]])

    def test_surgery_name_count(self):
        with pytest.raises(InvariantViolationError, match="surgery names"):
            FramedLinkData.build([[3]], surgery_names=["A", "B"])


class TestFillingSlopes:
    def test_q_matrix(self):
        slopes = FillingSlopes.build([[2]], [2])
        assert slopes.q_matrix == ExactMatrix([[2]], 1)

    def test_zero_slope(self):
        with pytest.raises(InvariantViolationError, match="q\\[0\\] is zero"):
            FillingSlopes.build([[1]], [0])

    def test_length_mismatch(self):
        with pytest.raises(InvariantViolationError, match="intersection numbers"):
            FillingSlopes.build([[1, 0], [0, 1]], [1])
