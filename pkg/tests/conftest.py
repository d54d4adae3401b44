"""
Shared fixtures: trefoil and figure-8 surfaces, a lens-space surgery and JSON documents.

Chirality is pinned by the trefoil Seifert matrix [[-1, 1], [0, -1]], whose
signature is -2.
"""

import json
from pathlib import Path
from typing import Any, Callable, Dict

import pytest

from src.data import FramedLinkData, GoeritzData, SeifertData
from src.exact import LaurentPolynomial, RootOfUnity, ratfun_reduce
from src.linalg import ExactMatrix

TREFOIL = [[-1, 1], [0, -1]]
FIGURE_EIGHT = [[1, 1], [0, -1]]


@pytest.fixture
def trefoil_matrix() -> ExactMatrix:
    return ExactMatrix(TREFOIL, 2)


@pytest.fixture
def figure_eight_matrix() -> ExactMatrix:
    return ExactMatrix(FIGURE_EIGHT, 2)


@pytest.fixture
def trefoil() -> SeifertData:
    """Trefoil with K1 dual to a_1 and K2 dual to a_2, unlinked in S^3."""
    return SeifertData.build(
        TREFOIL,
        components={"K1": [1, 0], "K2": [0, 1]},
        ambient_lk={("K1", "K2"): 0},
    )


@pytest.fixture
def figure_eight() -> SeifertData:
    return SeifertData.build(
        FIGURE_EIGHT,
        components={"K1": [1, 0], "K2": [1, 1]},
        ambient_lk={("K1", "K2"): 1},
    )


@pytest.fixture
def trefoil_goeritz() -> GoeritzData:
    """M + M^T of the trefoil, read as the Goeritz matrix of an orientable surface."""
    return GoeritzData.build(
        [[-2, 1], [1, -2]],
        components={"K1": [1, 0], "K2": [0, 1]},
        ambient_lk={("K1", "K2"): 0},
        euler_number=0,
    )


@pytest.fixture
def small_goeritz() -> GoeritzData:
    return GoeritzData.build(
        [[-3]],
        components={"K1": [1], "K2": [2]},
        ambient_lk={("K1", "K2"): 0},
        euler_number=0,
    )


@pytest.fixture
def lens_surgery() -> FramedLinkData:
    """3-framed unknot J with two meridians K1 and K2: the lens space L(3, 1)."""
    return FramedLinkData.build(
        [[3]],
        components={"K1": [1], "K2": [1]},
        ambient_lk={("K1", "K2"): 0},
        surgery_names=["J"],
    )


@pytest.fixture
def minus_one() -> RootOfUnity:
    return RootOfUnity(1, 2)


@pytest.fixture
def trefoil_delta() -> LaurentPolynomial:
    return LaurentPolynomial({0: 1, 1: -1, 2: 1})


@pytest.fixture
def one_minus_t() -> LaurentPolynomial:
    return LaurentPolynomial({0: 1, 1: -1})


@pytest.fixture
def trefoil_lambda(one_minus_t, trefoil_delta):
    """(1 - t)/(1 - t + t^2)."""
    return ratfun_reduce(one_minus_t, trefoil_delta)


@pytest.fixture
def write_document(tmp_path: Path) -> Callable[..., Path]:
    """Write a JSON document into tmp_path and return its path."""

    def write(document: Dict[str, Any], name: str = "input.json") -> Path:
        path = tmp_path / name
        path.write_text(json.dumps(document), encoding="utf-8")
        return path

    return write


@pytest.fixture
def trefoil_document() -> Dict[str, Any]:
    return {
        "kind": "seifert",
        "matrix": TREFOIL,
        "components": [{"name": "K1", "v": [1, 0]}, {"name": "K2", "v": [0, 1]}],
        "lk": [{"pair": ["K1", "K2"], "value": 0}],
    }
