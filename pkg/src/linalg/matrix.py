"""
Matrix - Dense exact matrices and signature triples.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable, List, Sequence, Tuple

from ..errors import DimensionMismatchError, InputError, NotSquareError
from ..exact import LaurentPolynomial, RationalFunction

INTEGER = "integer"
RATIONAL = "rational"
LAURENT = "laurent"
RATFUN = "ratfun"

_KIND_ORDER = {INTEGER: 0, RATIONAL: 1, LAURENT: 1, RATFUN: 2}


def scalar_kind(value: Any) -> str:
    """Kind tag of a single scalar."""
    if isinstance(value, bool):
        raise InputError(f"Booleans are not matrix entries: {value!r}")
    if isinstance(value, int):
        return INTEGER
    if isinstance(value, Fraction):
        return INTEGER if value.denominator == 1 else RATIONAL
    if isinstance(value, LaurentPolynomial):
        return LAURENT
    if isinstance(value, RationalFunction):
        return RATFUN
    raise InputError(f"Unsupported matrix entry {value!r}")


def _join_kinds(a: str, b: str) -> str:
    if a == b:
        return a
    pair = {a, b}
    if INTEGER in pair:
        return (pair - {INTEGER}).pop()
    if RATFUN in pair:
        if RATIONAL in pair:
            raise InputError("Cannot mix rational numbers with rational functions")
        return RATFUN
    raise InputError("Cannot mix rational numbers with Laurent polynomials")


def lift(value: Any, kind: str) -> Any:
    """Convert a scalar to the given kind."""
    if kind == INTEGER:
        return int(value)
    if kind == RATIONAL:
        return Fraction(value)
    if kind == LAURENT:
        if isinstance(value, LaurentPolynomial):
            return value
        return LaurentPolynomial.constant(int(value))
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, LaurentPolynomial):
        return RationalFunction.from_laurent(value)
    return RationalFunction.from_laurent(int(value))


def zero_of(kind: str) -> Any:
    return lift(0, kind)


def one_of(kind: str) -> Any:
    return lift(1, kind)


class ExactMatrix:
    """
    Immutable dense row-major matrix whose entries share one scalar kind.

    Kinds: "integer", "rational", "laurent" (Z[t, 1/t]) and "ratfun"
    (its quotient field). Mixed input is lifted to the smallest common kind.
    """

    __slots__ = ("rows", "cols", "entries", "kind")

    def __init__(self, data: Sequence[Sequence[Any]] = (), cols: int = 0) -> None:
        """
        Build a matrix from nested rows.

        Args:
            data: Sequence of equal-length rows
            cols: Column count, only used when there are no rows
        """
        rows_list = [list(row) for row in data]
        if rows_list:
            cols = len(rows_list[0])
            for index, row in enumerate(rows_list):
                if len(row) != cols:
                    raise DimensionMismatchError(
                        f"Row {index} has {len(row)} entries, expected {cols}"
                    )
        flat = [entry for row in rows_list for entry in row]
        kind = INTEGER
        for entry in flat:
            kind = _join_kinds(kind, scalar_kind(entry))
        self.rows = len(rows_list)
        self.cols = cols
        self.kind = kind
        self.entries: Tuple[Any, ...] = tuple(lift(entry, kind) for entry in flat)

    # Constructors

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Iterable[Any]) -> "ExactMatrix":
        flat = list(entries)
        if len(flat) != rows * cols:
            raise DimensionMismatchError(f"Expected {rows * cols} entries, got {len(flat)}")
        return cls([flat[i * cols:(i + 1) * cols] for i in range(rows)], cols)

    @classmethod
    def from_function(cls, rows: int, cols: int, fn: Callable[[int, int], Any]) -> "ExactMatrix":
        return cls([[fn(i, j) for j in range(cols)] for i in range(rows)], cols)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls.from_function(n, n, lambda i, j: 1 if i == j else 0)

    @classmethod
    def empty(cls) -> "ExactMatrix":
        return cls([], 0)

    @classmethod
    def block_diagonal(cls, *blocks: "ExactMatrix") -> "ExactMatrix":
        size_r = sum(b.rows for b in blocks)
        size_c = sum(b.cols for b in blocks)
        data: List[List[Any]] = [[0] * size_c for _ in range(size_r)]
        r0 = c0 = 0
        for block in blocks:
            for i in range(block.rows):
                for j in range(block.cols):
                    data[r0 + i][c0 + j] = block[i, j]
            r0 += block.rows
            c0 += block.cols
        return cls(data, size_c)

    @classmethod
    def from_blocks(cls, grid: Sequence[Sequence["ExactMatrix"]]) -> "ExactMatrix":
        """Assemble a block matrix; blocks in one block-row share their row count."""
        data: List[List[Any]] = []
        for block_row in grid:
            height = block_row[0].rows
            for block in block_row:
                if block.rows != height:
                    raise DimensionMismatchError("Blocks in one block-row differ in height")
            for i in range(height):
                data.append([entry for block in block_row for entry in block.row(i)])
        cols = sum(block.cols for block in grid[0]) if grid else 0
        return cls(data, cols)

    # Accessors

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def require_square(self) -> None:
        if not self.is_square():
            raise NotSquareError(f"Expected a square matrix, got {self.rows}x{self.cols}")

    def __getitem__(self, index: Tuple[int, int]) -> Any:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"Entry ({i}, {j}) outside a {self.rows}x{self.cols} matrix")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> List[Any]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def column(self, j: int) -> List[Any]:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def to_lists(self) -> List[List[Any]]:
        return [self.row(i) for i in range(self.rows)]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix([[self[i, j] for j in cols] for i in rows], len(cols))

    def is_zero(self) -> bool:
        return all(entry == 0 for entry in self.entries)

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self[i, j] == self[j, i] for i in range(self.rows) for j in range(i + 1, self.cols)
        )

    def asymmetric_entries(self) -> List[Tuple[int, int]]:
        """Positions (i, j), i < j, where the entry differs from its mirror."""
        return [
            (i, j)
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
            if self[i, j] != self[j, i]
        ]

    # Algebra

    def map(self, fn: Callable[[Any], Any]) -> "ExactMatrix":
        return ExactMatrix.from_entries(self.rows, self.cols, (fn(e) for e in self.entries))

    def lift_to(self, kind: str) -> "ExactMatrix":
        return self.map(lambda e: lift(e, kind))

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix.from_function(self.cols, self.rows, lambda i, j: self[j, i])

    @property
    def T(self) -> "ExactMatrix":
        return self.transpose()

    def _check_same_shape(self, other: "ExactMatrix") -> None:
        if self.shape != other.shape:
            raise DimensionMismatchError(f"Shapes {self.shape} and {other.shape} differ")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        return ExactMatrix.from_entries(
            self.rows, self.cols, (a + b for a, b in zip(self.entries, other.entries))
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        return ExactMatrix.from_entries(
            self.rows, self.cols, (a - b for a, b in zip(self.entries, other.entries))
        )

    def __neg__(self) -> "ExactMatrix":
        return self.map(lambda e: -e)

    def scale(self, scalar: Any) -> "ExactMatrix":
        return self.map(lambda e: scalar * e)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        columns = [other.column(j) for j in range(other.cols)]
        return ExactMatrix.from_function(
            self.rows,
            other.cols,
            lambda i, j: dot(self.row(i), columns[j]),
        )

    def __mul__(self, other: Any) -> "ExactMatrix":
        if isinstance(other, ExactMatrix):
            return self @ other
        return self.scale(other)

    def __rmul__(self, other: Any) -> "ExactMatrix":
        return self.scale(other)

    def vector_product(self, v: Sequence[Any]) -> List[Any]:
        """Row vector times matrix."""
        if len(v) != self.rows:
            raise DimensionMismatchError(f"Vector of length {len(v)} against {self.rows} rows")
        return [dot(v, self.column(j)) for j in range(self.cols)]

    def congruence(self, p: "ExactMatrix") -> "ExactMatrix":
        """P^T A P."""
        return p.transpose() @ self @ p

    # Comparison and rendering

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def render(self) -> str:
        if self.rows == 0:
            return "[]"
        return "\n".join(
            "[" + ", ".join(render_scalar(entry) for entry in self.row(i)) + "]"
            for i in range(self.rows)
        )

    def __repr__(self) -> str:
        return f"ExactMatrix({self.to_lists()!r})"


def dot(v: Sequence[Any], w: Sequence[Any]) -> Any:
    if len(v) != len(w):
        raise DimensionMismatchError(f"Vectors of length {len(v)} and {len(w)}")
    total: Any = 0
    for a, b in zip(v, w):
        if a != 0 and b != 0:
            total = total + a * b
    return total


def render_scalar(value: Any) -> str:
    from ..exact import render_rational

    if isinstance(value, (int, Fraction)):
        return render_rational(value)
    return value.render()


@dataclass(frozen=True)
class SignatureTriple:
    """Inertia of a symmetric or Hermitian form."""

    positives: int
    negatives: int
    zeros: int

    @property
    def signature(self) -> int:
        return self.positives - self.negatives

    @property
    def dimension(self) -> int:
        return self.positives + self.negatives + self.zeros

    def __add__(self, other: "SignatureTriple") -> "SignatureTriple":
        return SignatureTriple(
            self.positives + other.positives,
            self.negatives + other.negatives,
            self.zeros + other.zeros,
        )

    def render(self) -> str:
        return f"({self.positives}, {self.negatives}, {self.zeros})"
