"""
Documents - Load, schema-check and validate JSON input documents.

A document is checked in two stages: first against the shipped JSON
schema (shape and types), then against the mathematical invariants of
the typed data it describes. Both stages report every problem with its
location instead of stopping at the first one.
"""

import json
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, List, Tuple, Union

from jsonschema import Draft7Validator

from .data import FillingSlopes, FramedLinkData, GoeritzData, SeifertData, pair_key
from .errors import InputError, InvariantViolationError, LinkingError, SchemaError
from .exact import parse_rational, render_rational
from .linalg import ExactMatrix
from .logger import get_logger

logger = get_logger()

SCHEMA_PATH = Path(__file__).parent / "schema" / "input_document.schema.json"

InputData = Union[SeifertData, GoeritzData, FramedLinkData, FillingSlopes]


@lru_cache(maxsize=1)
def _validator() -> Draft7Validator:
    with open(SCHEMA_PATH, "r", encoding="utf-8") as f:
        schema = json.load(f)
    Draft7Validator.check_schema(schema)
    return Draft7Validator(schema)


def load_document(path: Union[str, Path]) -> Dict[str, Any]:
    """
    Read a JSON document from disk.

    Raises:
        InputError: If the file is missing or is not JSON
    """
    path = Path(path)
    if not path.exists():
        raise InputError(f"Input file not found: {path}")
    try:
        with open(path, "r", encoding="utf-8") as f:
            document = json.load(f)
    except json.JSONDecodeError as e:
        raise InputError(f"{path} is not valid JSON: {e}") from e
    logger.debug(f"Loaded {path}")
    return document


def schema_errors(document: Any) -> List[str]:
    """Every schema violation, located by its JSON path."""
    errors = sorted(_validator().iter_errors(document), key=lambda e: list(e.absolute_path))
    messages = []
    for error in errors:
        location = "/".join(str(part) for part in error.absolute_path) or "<root>"
        messages.append(f"{location}: {error.message}")
    return messages


def _shape_violations(matrix: List[List[Any]]) -> List[str]:
    return [
        f"matrix row {index} has {len(row)} entries, expected {len(matrix)}"
        for index, row in enumerate(matrix)
        if len(row) != len(matrix)
    ]


def _components(document: Dict[str, Any]) -> Tuple[Dict[str, List[int]], List[str]]:
    components: Dict[str, List[int]] = {}
    violations = []
    for index, entry in enumerate(document.get("components", [])):
        name = entry["name"]
        if name in components:
            violations.append(f"components/{index}: duplicate component name '{name}'")
        components[name] = list(entry["v"])
    return components, violations


def _ambient_lk(document: Dict[str, Any]) -> Tuple[Dict[Tuple[str, str], Fraction], List[str]]:
    table: Dict[Tuple[str, str], Fraction] = {}
    violations = []
    for index, entry in enumerate(document.get("lk", [])):
        key = pair_key(*entry["pair"])
        if key in table:
            violations.append(f"lk/{index}: duplicate entry for the pair {list(key)}")
        try:
            table[key] = parse_rational(entry["value"])
        except LinkingError as e:
            violations.append(f"lk/{index}: {e}")
    return table, violations


def _rational_matrix(rows: List[List[Any]]) -> Tuple[List[List[Fraction]], List[str]]:
    matrix = []
    violations = []
    for i, row in enumerate(rows):
        parsed = []
        for j, entry in enumerate(row):
            try:
                parsed.append(parse_rational(entry))
            except LinkingError as e:
                violations.append(f"matrix entry ({i}, {j}): {e}")
                parsed.append(Fraction(0))
        matrix.append(parsed)
    return matrix, violations


def validate(document: Any) -> InputData:
    """
    Turn a raw document into typed data.

    Args:
        document: Parsed JSON value

    Returns:
        SeifertData, GoeritzData, FramedLinkData or FillingSlopes

    Raises:
        SchemaError: If the document does not match the schema
        InvariantViolationError: If the typed data breaks an invariant
    """
    errors = schema_errors(document)
    if errors:
        raise SchemaError("; ".join(errors))

    kind = document["kind"]
    rows = document["matrix"]
    components, violations = _components(document)
    ambient_lk, lk_violations = _ambient_lk(document)
    violations += lk_violations + _shape_violations(rows)
    if kind == "filling" and document.get("lk"):
        violations.append("lk: filling documents carry no ambient linking numbers")
    if violations:
        raise InvariantViolationError(violations)

    logger.debug(f"Document kind '{kind}', {len(rows)}x{len(rows)}, {len(components)} components")
    if kind == "seifert":
        return SeifertData.build(ExactMatrix(rows, len(rows)), components, ambient_lk)
    if kind == "goeritz":
        return GoeritzData.build(
            ExactMatrix(rows, len(rows)),
            components,
            ambient_lk,
            euler_number=document.get("euler_number"),
        )

    matrix, violations = _rational_matrix(rows)
    if kind == "framed_link":
        if violations:
            raise InvariantViolationError(violations)
        return FramedLinkData.build(
            ExactMatrix(matrix, len(matrix)),
            components,
            ambient_lk,
            surgery_names=document.get("surgery_names"),
        )

    q = []
    for index, entry in enumerate(document["q"]):
        try:
            q.append(parse_rational(entry))
        except LinkingError as e:
            violations.append(f"q/{index}: {e}")
    if violations:
        raise InvariantViolationError(violations)
    return FillingSlopes.build(matrix, q, components)


def load_and_validate(path: Union[str, Path]) -> InputData:
    """Load a document from disk and validate it."""
    return validate(load_document(path))


def _render_entry(value: Any) -> Any:
    if isinstance(value, int):
        return value
    return render_rational(value)


def to_document(data: Union[SeifertData, GoeritzData]) -> Dict[str, Any]:
    """Inverse of validate for Seifert and Goeritz data."""
    document: Dict[str, Any] = {
        "kind": "seifert" if isinstance(data, SeifertData) else "goeritz",
        "matrix": [[_render_entry(x) for x in row] for row in data.matrix.to_lists()],
    }
    if isinstance(data, GoeritzData) and data.euler_number is not None:
        document["euler_number"] = data.euler_number
    if data.components:
        document["components"] = [
            {"name": name, "v": list(vector)} for name, vector in data.components.items()
        ]
    if data.ambient_lk:
        document["lk"] = [
            {"pair": list(pair), "value": render_rational(value)}
            for pair, value in sorted(data.ambient_lk.items())
        ]
    return document
