"""
Moves - Stabilizations of Goeritz and Seifert data, and seeded random generators.

A Goeritz matrix grows by a half-twisted band ([+-1] block) or a hollow
handle (bordered [[0, 1], [1, x]] block). A Seifert matrix grows by an
orientable hollow handle with the bordered block [[0, theta], [theta', x]].
New basis curves come first: (a, b, alpha). Every lambda-pairing is
unchanged by these moves.
"""

import random
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from .data import GoeritzData, SeifertData
from .errors import DimensionMismatchError, InvalidInputError, InvalidSpecError
from .invariants import CrossingChangeSpec
from .linalg import ExactMatrix, det_exact
from .logger import get_logger

logger = get_logger()

THETA_VARIANTS = ((1, 0), (0, 1))


@dataclass(frozen=True)
class HalfTwistBand:
    """Attach a half-twisted band: G -> [sign] + G."""

    sign: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise InvalidSpecError(f"Half-twist sign must be +1 or -1, got {self.sign}")

    @property
    def kind(self) -> str:
        return "half_twist_band"


@dataclass(frozen=True)
class HollowHandleGoeritz:
    """Attach an unoriented hollow 1-handle with framing x and border xs."""

    x: int
    xs: Tuple[int, ...] = ()
    b_links: Dict[str, int] = field(default_factory=dict)

    @property
    def kind(self) -> str:
        return "hollow_handle_goeritz"


@dataclass(frozen=True)
class EnlargementSeifert:
    """Attach an orientable hollow 1-handle; theta picks one of the two orientation variants."""

    theta: Tuple[int, int]
    x: int
    rho: Tuple[int, ...] = ()
    xi: Tuple[int, ...] = ()
    b_links: Dict[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if tuple(self.theta) not in THETA_VARIANTS:
            raise InvalidSpecError(f"theta must be (1, 0) or (0, 1), got {self.theta}")

    @property
    def kind(self) -> str:
        return "enlargement_seifert"


GoeritzStep = Union[HalfTwistBand, HollowHandleGoeritz]
StabilizationStep = Union[HalfTwistBand, HollowHandleGoeritz, EnlargementSeifert]


def _check_length(vector: Sequence[int], size: int, what: str) -> None:
    if len(vector) != size:
        raise DimensionMismatchError(f"{what} has length {len(vector)}, the matrix has size {size}")


def _bordered(
    corner: Sequence[Sequence[int]], row: Sequence[int], column: Sequence[int], m: ExactMatrix
) -> ExactMatrix:
    """[[corner, (0 | row)], [(0 | column)^T, M]] with the border on the second new curve."""
    n = m.rows
    top = [
        list(corner[0]) + [0] * n,
        list(corner[1]) + list(row),
    ]
    body = [[0, column[r]] + m.row(r) for r in range(n)]
    return ExactMatrix(top + body, n + 2)


def _lifted_components(
    components: Mapping[str, Sequence[int]], prefix: Mapping[str, Sequence[int]]
) -> Dict[str, List[int]]:
    return {name: list(prefix[name]) + list(vector) for name, vector in components.items()}


# Goeritz moves


def stab_goeritz(data: GoeritzData, step: GoeritzStep) -> GoeritzData:
    """
    Stabilize Goeritz data by one move.

    A half-twisted band changes the normal Euler number by -2 sign.

    Raises:
        DimensionMismatchError: If the border does not match the matrix
        InvalidSpecError: If the step is not a Goeritz move
    """
    n = data.size
    if isinstance(step, HalfTwistBand):
        matrix = ExactMatrix.block_diagonal(ExactMatrix([[step.sign]], 1), data.matrix)
        prefix = {name: [0] for name in data.components}
        euler = None if data.euler_number is None else data.euler_number - 2 * step.sign
    elif isinstance(step, HollowHandleGoeritz):
        _check_length(step.xs, n, "xs")
        matrix = _bordered([[0, 1], [1, step.x]], step.xs, step.xs, data.matrix)
        prefix = {name: [0, step.b_links.get(name, 0)] for name in data.components}
        euler = data.euler_number
    else:
        raise InvalidSpecError(f"{step.kind} is not a Goeritz move")
    return GoeritzData.build(
        matrix,
        components=_lifted_components(data.components, prefix),
        ambient_lk=data.ambient_lk,
        euler_number=euler,
    )


def destabilize_goeritz(data: GoeritzData, step: GoeritzStep) -> GoeritzData:
    """
    Undo a recorded Goeritz move.

    Raises:
        InvalidInputError: If the data does not start with the step's block
    """
    width = 1 if isinstance(step, HalfTwistBand) else 2
    if data.size < width or data != stab_goeritz(_drop_leading(data, width), step):
        raise InvalidInputError(f"The Goeritz data does not end with a {step.kind} move")
    return _drop_leading(data, width)


def _drop_leading(data: GoeritzData, width: int) -> GoeritzData:
    keep = list(range(width, data.size))
    euler = data.euler_number
    if width == 1 and euler is not None:
        euler += 2 * data.matrix[0, 0]
    return GoeritzData.build(
        data.matrix.submatrix(keep, keep),
        components={name: vector[width:] for name, vector in data.components.items()},
        ambient_lk=data.ambient_lk,
        euler_number=euler,
    )


# Seifert moves


def stab_seifert(data: SeifertData, step: EnlargementSeifert) -> SeifertData:
    """
    Enlarge a Seifert matrix by an orientable hollow handle.

    M' = [[0, theta, 0], [theta', x, rho], [0, xi^T, M]], V -> (0, lk(K_i, b), V).

    Raises:
        DimensionMismatchError: If rho or xi does not match M
        InvalidSpecError: If the step is not a Seifert move
    """
    if not isinstance(step, EnlargementSeifert):
        raise InvalidSpecError(f"{step.kind} is not a Seifert move")
    n = data.size
    _check_length(step.rho, n, "rho")
    _check_length(step.xi, n, "xi")
    theta, theta_prime = step.theta
    matrix = _bordered([[0, theta], [theta_prime, step.x]], step.rho, step.xi, data.matrix)
    prefix = {name: [0, step.b_links.get(name, 0)] for name in data.components}
    return data.with_matrix(matrix, _lifted_components(data.components, prefix))


def destabilize_seifert(data: SeifertData, step: EnlargementSeifert) -> SeifertData:
    """
    Undo a recorded enlargement.

    Raises:
        InvalidInputError: If the data does not start with the step's block
    """
    if data.size < 2:
        raise InvalidInputError("A 0x0 or 1x1 Seifert matrix cannot be destabilized")
    keep = list(range(2, data.size))
    smaller = data.with_matrix(
        data.matrix.submatrix(keep, keep),
        {name: vector[2:] for name, vector in data.components.items()},
    )
    if stab_seifert(smaller, step) != data:
        raise InvalidInputError("The Seifert data does not end with this enlargement")
    return smaller


# Random generators


def random_unimodular(rng: random.Random, n: int, steps: int) -> ExactMatrix:
    rows = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        factor = rng.choice((-1, 1))
        for c in range(n):
            rows[i][c] += factor * rows[j][c]
    return ExactMatrix(rows, n)


def random_seifert_matrix(rng: random.Random, genus: int, noise: int = 2) -> ExactMatrix:
    """
    Random valid Seifert matrix of size 2 genus.

    Built as the sum of [[0, 1], [0, 0]] blocks and symmetric noise, then
    conjugated by a random unimodular congruence; M - M^T stays unimodular.
    """
    n = 2 * genus
    if n == 0:
        return ExactMatrix.empty()
    rows = [[0] * n for _ in range(n)]
    for block in range(genus):
        rows[2 * block][2 * block + 1] = 1
    for i in range(n):
        for j in range(i, n):
            value = rng.randint(-noise, noise)
            rows[i][j] += value
            if i != j:
                rows[j][i] += value
    p = random_unimodular(rng, n, steps=n)
    return ExactMatrix(rows, n).congruence(p)


def _random_components(
    rng: random.Random, size: int, count: int, spread: int
) -> Dict[str, List[int]]:
    return {
        f"K{index + 1}": [rng.randint(-spread, spread) for _ in range(size)]
        for index in range(count)
    }


def _random_lk(rng: random.Random, names: Sequence[str], spread: int) -> Dict[Tuple[str, str], int]:
    return {
        (a, b): rng.randint(-spread, spread)
        for index, a in enumerate(names)
        for b in names[index + 1:]
    }


def random_seifert_data(
    rng: random.Random,
    max_genus: int = 3,
    components: int = 2,
    spread: int = 2,
) -> SeifertData:
    """Random Seifert data of genus 1..max_genus with integer ambient linking numbers."""
    matrix = random_seifert_matrix(rng, rng.randint(1, max_genus))
    vectors = _random_components(rng, matrix.rows, components, spread)
    return SeifertData.build(matrix, vectors, _random_lk(rng, list(vectors), spread))


def random_goeritz_data(
    rng: random.Random,
    max_size: int = 4,
    components: int = 2,
    spread: int = 3,
) -> GoeritzData:
    """Random nonsingular symmetric Goeritz data with an even Euler number."""
    while True:
        n = rng.randint(1, max_size)
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                rows[i][j] = rows[j][i] = rng.randint(-spread, spread)
        matrix = ExactMatrix(rows, n)
        if det_exact(matrix) != 0:
            break
        logger.debug("Discarding a singular random Goeritz matrix")
    vectors = _random_components(rng, n, components, 2)
    return GoeritzData.build(
        matrix,
        vectors,
        _random_lk(rng, list(vectors), 2),
        euler_number=2 * rng.randint(-3, 3),
    )


def random_goeritz_step(rng: random.Random, data: GoeritzData, spread: int = 3) -> GoeritzStep:
    if rng.random() < 0.5:
        return HalfTwistBand(rng.choice((-1, 1)))
    return HollowHandleGoeritz(
        x=rng.randint(-spread, spread),
        xs=tuple(rng.randint(-spread, spread) for _ in range(data.size)),
        b_links={name: rng.randint(-spread, spread) for name in data.components},
    )


def random_seifert_step(
    rng: random.Random, data: SeifertData, spread: int = 3
) -> EnlargementSeifert:
    return EnlargementSeifert(
        theta=rng.choice(THETA_VARIANTS),
        x=rng.randint(-spread, spread),
        rho=tuple(rng.randint(-spread, spread) for _ in range(data.size)),
        xi=tuple(rng.randint(-spread, spread) for _ in range(data.size)),
        b_links={name: rng.randint(-spread, spread) for name in data.components},
    )


def random_crossing_spec(
    rng: random.Random,
    size: int,
    max_n: int = 3,
    disk_link: Optional[int] = 0,
) -> CrossingChangeSpec:
    """Random crossing change with n in [-max_n, max_n] minus 0."""
    n = rng.choice([k for k in range(-max_n, max_n + 1) if k])
    return CrossingChangeSpec(
        v=tuple(rng.randint(-2, 2) for _ in range(size)),
        n=n,
        epsilon=rng.choice((-1, 1)),
        disk_link=disk_link if disk_link is not None else rng.randint(0, 3),
    )
