"""
Data - Typed inputs: Seifert, Goeritz, framed-link and filling-slope data.

Every class validates itself on construction and raises
InvariantViolationError with the full list of located violations.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .errors import InvariantViolationError, MissingAmbientLkError, UnknownComponentError
from .linalg import ExactMatrix, det_exact

Vector = Tuple[int, ...]
PairKey = Tuple[str, str]


def pair_key(a: str, b: str) -> PairKey:
    """Unordered pair as a sorted tuple."""
    return (a, b) if a <= b else (b, a)


def _vector_violations(components: Mapping[str, Sequence[int]], size: int, what: str) -> List[str]:
    violations = []
    for name, vector in components.items():
        if len(vector) != size:
            violations.append(
                f"{what} '{name}': vector has length {len(vector)}, expected {size}"
            )
        for index, entry in enumerate(vector):
            if isinstance(entry, bool) or not isinstance(entry, int):
                violations.append(f"{what} '{name}': entry {index} is not an integer")
    return violations


def _integer_violations(matrix: ExactMatrix, what: str) -> List[str]:
    if matrix.kind == "integer":
        return []
    if matrix.kind != "rational":
        return [f"{what} must have integer entries"]
    return [
        f"{what} entry ({i}, {j}) is not an integer"
        for i in range(matrix.rows)
        for j in range(matrix.cols)
        if Fraction(matrix[i, j]).denominator != 1
    ]


def _symmetry_violations(matrix: ExactMatrix, what: str) -> List[str]:
    return [
        f"{what} is not symmetric at ({i}, {j}): {matrix[i, j]} != {matrix[j, i]}"
        for i, j in matrix.asymmetric_entries()
    ]


def _lk_violations(ambient_lk: Mapping[PairKey, Fraction], names: Sequence[str]) -> List[str]:
    known = set(names)
    return [
        f"lk entry {list(pair)} names an unknown component"
        for pair in ambient_lk
        if not set(pair) <= known
    ]


@dataclass(frozen=True)
class LinkingTable:
    """Satellite components with linking vectors and ambient linking numbers."""

    components: Dict[str, Vector] = field(default_factory=dict)
    ambient_lk: Dict[PairKey, Fraction] = field(default_factory=dict)

    def vector(self, name: str) -> Vector:
        try:
            return self.components[name]
        except KeyError:
            raise UnknownComponentError(f"Unknown component '{name}'") from None

    def ambient(self, a: str, b: str) -> Optional[Fraction]:
        return self.ambient_lk.get(pair_key(a, b))

    def require_ambient(self, a: str, b: str) -> Fraction:
        """
        Ambient linking number of a pair.

        Raises:
            MissingAmbientLkError: If the pair has no recorded value
        """
        value = self.ambient(a, b)
        if value is None:
            raise MissingAmbientLkError(f"No ambient linking number for the pair ({a}, {b})")
        return value

    @property
    def names(self) -> List[str]:
        return list(self.components)


def _freeze(components: Optional[Mapping[str, Sequence[int]]]) -> Dict[str, Vector]:
    return {name: tuple(vector) for name, vector in (components or {}).items()}


def _freeze_lk(ambient_lk: Optional[Mapping[PairKey, object]]) -> Dict[PairKey, Fraction]:
    return {pair_key(*pair): Fraction(value) for pair, value in (ambient_lk or {}).items()}


@dataclass(frozen=True)
class SeifertData(LinkingTable):
    """Seifert matrix M (entries lk(a_i^+, a_j)) with satellite components."""

    matrix: ExactMatrix = field(default_factory=ExactMatrix.empty)

    def __post_init__(self) -> None:
        violations = self.violations()
        if violations:
            raise InvariantViolationError(violations)

    @classmethod
    def build(
        cls,
        matrix: Sequence[Sequence[int]] | ExactMatrix,
        components: Optional[Mapping[str, Sequence[int]]] = None,
        ambient_lk: Optional[Mapping[PairKey, object]] = None,
    ) -> "SeifertData":
        m = matrix if isinstance(matrix, ExactMatrix) else ExactMatrix(matrix, len(matrix))
        return cls(components=_freeze(components), ambient_lk=_freeze_lk(ambient_lk), matrix=m)

    @property
    def size(self) -> int:
        return self.matrix.rows

    def violations(self) -> List[str]:
        m = self.matrix
        if not m.is_square():
            return [f"Seifert matrix is {m.rows}x{m.cols}, expected square"]
        violations = _integer_violations(m, "Seifert matrix")
        if not violations:
            skew = m - m.transpose()
            if det_exact(skew) not in (1, -1):
                violations.append("M - M^T singular or not unimodular")
        violations += _vector_violations(self.components, m.rows, "component")
        violations += _lk_violations(self.ambient_lk, self.names)
        return violations

    def with_matrix(
        self, matrix: ExactMatrix, components: Mapping[str, Sequence[int]]
    ) -> "SeifertData":
        return SeifertData(
            components=_freeze(components), ambient_lk=dict(self.ambient_lk), matrix=matrix
        )


@dataclass(frozen=True)
class GoeritzData(LinkingTable):
    """Goeritz matrix G (entries lk(a_i, tau a_j)) with optional normal Euler number."""

    matrix: ExactMatrix = field(default_factory=ExactMatrix.empty)
    euler_number: Optional[int] = None

    def __post_init__(self) -> None:
        violations = self.violations()
        if violations:
            raise InvariantViolationError(violations)

    @classmethod
    def build(
        cls,
        matrix: Sequence[Sequence[int]] | ExactMatrix,
        components: Optional[Mapping[str, Sequence[int]]] = None,
        ambient_lk: Optional[Mapping[PairKey, object]] = None,
        euler_number: Optional[int] = None,
    ) -> "GoeritzData":
        m = matrix if isinstance(matrix, ExactMatrix) else ExactMatrix(matrix, len(matrix))
        return cls(
            components=_freeze(components),
            ambient_lk=_freeze_lk(ambient_lk),
            matrix=m,
            euler_number=euler_number,
        )

    @property
    def size(self) -> int:
        return self.matrix.rows

    def violations(self) -> List[str]:
        m = self.matrix
        if not m.is_square():
            return [f"Goeritz matrix is {m.rows}x{m.cols}, expected square"]
        violations = _integer_violations(m, "Goeritz matrix")
        violations += _symmetry_violations(m, "Goeritz matrix")
        if self.euler_number is not None and self.euler_number % 2:
            violations.append(f"euler_number {self.euler_number} is odd")
        violations += _vector_violations(self.components, m.rows, "component")
        violations += _lk_violations(self.ambient_lk, self.names)
        return violations


@dataclass(frozen=True)
class FramedLinkData(LinkingTable):
    """
    Rational framed link: linking matrix with framings p/q on the diagonal.

    ``components`` holds the satellite knots K_i with their linking vectors
    against the surgery components named in ``surgery_names``.
    """

    surgery_names: Tuple[str, ...] = ()
    linking_matrix: ExactMatrix = field(default_factory=ExactMatrix.empty)

    def __post_init__(self) -> None:
        violations = self.violations()
        if violations:
            raise InvariantViolationError(violations)

    @classmethod
    def build(
        cls,
        linking_matrix: Sequence[Sequence[object]] | ExactMatrix,
        components: Optional[Mapping[str, Sequence[int]]] = None,
        ambient_lk: Optional[Mapping[PairKey, object]] = None,
        surgery_names: Optional[Sequence[str]] = None,
    ) -> "FramedLinkData":
        g = (
            linking_matrix
            if isinstance(linking_matrix, ExactMatrix)
            else ExactMatrix(
                [[Fraction(x) for x in row] for row in linking_matrix], len(linking_matrix)
            )
        )
        names = tuple(surgery_names) if surgery_names else tuple(f"J{i + 1}" for i in range(g.rows))
        return cls(
            components=_freeze(components),
            ambient_lk=_freeze_lk(ambient_lk),
            surgery_names=names,
            linking_matrix=g,
        )

    def violations(self) -> List[str]:
        g = self.linking_matrix
        if not g.is_square():
            return [f"Linking matrix is {g.rows}x{g.cols}, expected square"]
        violations = _symmetry_violations(g, "Linking matrix")
        for i in range(g.rows):
            for j in range(g.cols):
                if i != j and Fraction(g[i, j]).denominator != 1:
                    violations.append(
                        f"Linking matrix off-diagonal entry ({i}, {j}) is not an integer"
                    )
        if len(self.surgery_names) != g.rows:
            violations.append(
                f"{len(self.surgery_names)} surgery names for a {g.rows}x{g.rows} linking matrix"
            )
        violations += _vector_violations(self.components, g.rows, "satellite")
        violations += _lk_violations(self.ambient_lk, self.names)
        return violations


@dataclass(frozen=True)
class FillingSlopes:
    """Change of basis [delta] = B [mu] with intersection numbers q_i = mu_i . delta_i."""

    b: ExactMatrix
    q: Tuple[Fraction, ...]
    components: Dict[str, Vector] = field(default_factory=dict)

    def __post_init__(self) -> None:
        violations = []
        if not self.b.is_square():
            violations.append(f"B is {self.b.rows}x{self.b.cols}, expected square")
        elif len(self.q) != self.b.rows:
            violations.append(
                f"{len(self.q)} intersection numbers for a {self.b.rows}x{self.b.rows} B"
            )
        violations += [f"q[{i}] is zero" for i, value in enumerate(self.q) if value == 0]
        violations += _vector_violations(self.components, self.b.rows, "component")
        if violations:
            raise InvariantViolationError(violations)

    @classmethod
    def build(
        cls,
        b: Sequence[Sequence[object]],
        q: Sequence[object],
        components: Optional[Mapping[str, Sequence[int]]] = None,
    ) -> "FillingSlopes":
        matrix = ExactMatrix([[Fraction(x) for x in row] for row in b], len(b))
        return cls(matrix, tuple(Fraction(x) for x in q), _freeze(components))

    @property
    def q_matrix(self) -> ExactMatrix:
        n = len(self.q)
        return ExactMatrix.from_function(n, n, lambda i, j: self.q[i] if i == j else 0)

    def vector(self, name: str) -> Vector:
        try:
            return self.components[name]
        except KeyError:
            raise UnknownComponentError(f"Unknown component '{name}'") from None
