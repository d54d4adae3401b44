"""
Properties - Seeded property checks run by ``lnk selftest``.

Each property draws its samples from a ``random.Random`` seeded by the
run seed, the property name and the sample index, so a failing sample
can be replayed on its own.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, List, Optional

from .covers import (
    double_cover_lk,
    eta_function,
    fox_order,
    goeritz_lambda,
    homology_order,
    infinite_cyclic_lk,
    lambda_kl,
    p_fold_lk,
    seifert_lambda_omega,
    seifert_lambda_t,
)
from .data import FillingSlopes, GoeritzData
from .errors import InvalidInputError, LinkingError, OmegaIsAlexanderRootError
from .exact import (
    ComplexApprox,
    LaurentPolynomial,
    RootOfUnity,
    cyclotomic_vanishes,
    equal_up_to_unit,
    eval_root_of_unity,
    parse_laurent,
    parse_rational_function,
)
from .exact.balls import interval_context, iv_root_of_unity
from .invariants import (
    alexander,
    conway,
    conway_ratio_identity,
    conway_to_alexander,
    crossing_change_alexander,
    crossing_change_goeritz,
    crossing_change_seifert,
    crossing_change_signature,
    crossing_change_signature_unoriented,
    goeritz_signature,
    signature_phase,
    tristram_levine,
)
from .linalg import (
    ExactMatrix,
    det_exact,
    inverse_bilinear,
    inverse_matrix,
    symmetric_signature,
    unimodular_split,
)
from .moves import (
    destabilize_goeritz,
    destabilize_seifert,
    random_crossing_spec,
    random_goeritz_data,
    random_goeritz_step,
    random_seifert_data,
    random_seifert_matrix,
    random_seifert_step,
    random_unimodular,
    stab_goeritz,
    stab_seifert,
)
from .report import CheckReport
from .surgery import surgery_duality, surgery_lk_delta


class PropertyFailure(AssertionError):
    """A sample violates the property."""


class SkipSample(Exception):
    """The sample falls outside the property's hypotheses."""


@dataclass(frozen=True)
class SuiteContext:
    precision: int
    precision_cap: int


@dataclass(frozen=True)
class Property:
    name: str
    description: str
    samples: int
    check: Callable[[random.Random, SuiteContext], None]


PROPERTIES: List[Property] = []


def register(name: str, samples: int, description: str) -> Callable:
    def decorator(check: Callable[[random.Random, SuiteContext], None]) -> Callable:
        PROPERTIES.append(Property(name, description, samples, check))
        return check

    return decorator


def sample_rng(seed: int, name: str, index: int) -> random.Random:
    return random.Random(f"{seed}:{name}:{index}")


def expect(condition: bool, message: str) -> None:
    if not condition:
        raise PropertyFailure(message)


def random_omega(rng: random.Random, max_order: int = 12) -> RootOfUnity:
    order = rng.randint(2, max_order)
    numerator = rng.choice([k for k in range(1, order) if gcd(k, order) == 1])
    return RootOfUnity(numerator, order)


def omega_avoiding(
    rng: random.Random, *polynomials: LaurentPolynomial, tries: int = 8
) -> RootOfUnity:
    """A random root of unity that is a root of none of the polynomials."""
    for _ in range(tries):
        omega = random_omega(rng)
        if not any(cyclotomic_vanishes(f, omega) for f in polynomials):
            return omega
    raise SkipSample("no admissible root of unity found")


def _changed_seifert(rng: random.Random) -> tuple:
    data = random_seifert_data(rng, max_genus=3, components=0)
    spec = random_crossing_spec(rng, data.size)
    return data.matrix, spec, crossing_change_seifert(data.matrix, spec)


# Classical invariants


@register("alexander-symmetry", 50, "Delta(t) is unit-equal to Delta(1/t) and Delta(1) = 1")
def check_alexander_symmetry(rng: random.Random, ctx: SuiteContext) -> None:
    delta = alexander(random_seifert_matrix(rng, rng.randint(1, 4)))
    expect(equal_up_to_unit(delta, delta.substitute_inverse()), f"{delta} is not symmetric")
    expect(delta.evaluate(1) == 1, f"{delta} does not take the value 1 at t = 1")


@register("conway-alexander", 50, "z^2 = t - 2 + 1/t turns the Conway polynomial into Delta")
def check_conway_alexander(rng: random.Random, ctx: SuiteContext) -> None:
    m = random_seifert_matrix(rng, rng.randint(1, 3))
    nabla = conway(m)
    expect(nabla.coefficient(0) == 1, f"Conway polynomial {nabla.render('z')} has nabla(0) != 1")
    expect(
        equal_up_to_unit(conway_to_alexander(nabla), alexander(m)), "Conway and Alexander disagree"
    )


@register("signature-phase", 50, "sign of nabla(i|1 - w|) equals i^sigma_w")
def check_signature_phase(rng: random.Random, ctx: SuiteContext) -> None:
    m = random_seifert_matrix(rng, rng.randint(1, 3))
    omega = omega_avoiding(rng, alexander(m))
    sigma = tristram_levine(m, omega, ctx.precision, ctx.precision_cap)
    expect(sigma % 2 == 0, f"odd signature {sigma} at {omega}")
    phase = signature_phase(m, omega, ctx.precision, ctx.precision_cap)
    expected = 1 if sigma % 4 == 0 else -1
    expect(phase == expected, f"phase {phase} but sigma = {sigma} at {omega}")


@register("round-trip", 30, "render then parse is the identity on canonical forms")
def check_round_trip(rng: random.Random, ctx: SuiteContext) -> None:
    data = random_seifert_data(rng, max_genus=2, components=2)
    delta = alexander(data.matrix)
    expect(parse_laurent(delta.render()) == delta, f"{delta.render()} does not round-trip")
    lam = seifert_lambda_t(data, "K1", "K2")
    expect(parse_rational_function(lam.render()) == lam, f"{lam.render()} does not round-trip")


# Crossing changes


@register("crossing-two-path", 200, "formula and enlarged-matrix Alexander polynomials agree")
def check_crossing_two_path(rng: random.Random, ctx: SuiteContext) -> None:
    m, spec, changed = _changed_seifert(rng)
    formula = crossing_change_alexander(m, spec)
    expect(
        equal_up_to_unit(formula, alexander(changed)),
        f"formula {formula} differs from det path {alexander(changed)} for {spec}",
    )


@register("crossing-signature", 50, "predicted sigma_w agrees with the changed Seifert matrix")
def check_crossing_signature(rng: random.Random, ctx: SuiteContext) -> None:
    m, spec, changed = _changed_seifert(rng)
    omega = omega_avoiding(rng, alexander(m), alexander(changed))
    predicted = crossing_change_signature(m, spec, omega, ctx.precision, ctx.precision_cap)
    actual = tristram_levine(changed, omega, ctx.precision, ctx.precision_cap)
    expect(predicted == actual, f"predicted {predicted}, actual {actual} at {omega} for {spec}")


@register(
    "conway-ratio",
    50,
    "both sides of the Conway ratio identity overlap; the sign predicts the jump",
)
def check_conway_ratio(rng: random.Random, ctx: SuiteContext) -> None:
    m, spec, changed = _changed_seifert(rng)
    omega = omega_avoiding(rng, alexander(m), alexander(changed))
    bits = max(ctx.precision, 256)
    identity = conway_ratio_identity(m, spec, omega, bits, max(ctx.precision_cap, bits))
    expect(identity.lhs.overlaps(identity.rhs), f"{identity.lhs} and {identity.rhs} are disjoint")
    expect(
        (identity.lhs - identity.rhs).radius_at_most("1e-20"),
        "balls are wider than 1e-20",
    )
    jump = tristram_levine(changed, omega, bits) != tristram_levine(m, omega, bits)
    expect((identity.ratio_sign < 0) == jump, f"ratio sign {identity.ratio_sign}, jump {jump}")


@register("crossing-unoriented", 50, "predicted sigma agrees with the changed Goeritz matrix")
def check_crossing_unoriented(rng: random.Random, ctx: SuiteContext) -> None:
    data = random_goeritz_data(rng, components=0)
    spec = random_crossing_spec(rng, data.size, disk_link=None)
    try:
        predicted = crossing_change_signature_unoriented(data, spec)
    except InvalidInputError:
        raise SkipSample("2 n lambda = 1") from None
    actual = goeritz_signature(crossing_change_goeritz(data, spec))
    expect(predicted == actual, f"predicted {predicted}, actual {actual} for {spec}")


# Stabilization


@register("goeritz-stabilization", 100, "half twists and hollow handles keep every pairing")
def check_goeritz_stabilization(rng: random.Random, ctx: SuiteContext) -> None:
    data = random_goeritz_data(rng)
    names = data.names
    before = {(i, j): goeritz_lambda(data, i, j) for i in names for j in names}
    lifts = [((names[0], 1), (names[-1], 2)), ((names[0], 1), (names[-1], 1))]
    lifts = [pair for pair in lifts if pair[0] != pair[1]]
    cover_before = [double_cover_lk(data, *pair) for pair in lifts]
    sigma_before = goeritz_signature(data)

    current = data
    steps = []
    for _ in range(rng.randint(1, 5)):
        step = random_goeritz_step(rng, current)
        current = stab_goeritz(current, step)
        steps.append(step)

    after = {(i, j): goeritz_lambda(current, i, j) for i in names for j in names}
    expect(before == after, f"lambda changed after {len(steps)} moves")
    cover_after = [double_cover_lk(current, *pair) for pair in lifts]
    expect(cover_before == cover_after, "double cover lk changed")
    expect(goeritz_signature(current) == sigma_before, "signature changed")
    for step in reversed(steps):
        current = destabilize_goeritz(current, step)
    expect(current == data, "destabilizing does not restore the data")


@register("seifert-stabilization", 100, "enlargements keep every pairing and classical invariant")
def check_seifert_stabilization(rng: random.Random, ctx: SuiteContext) -> None:
    data = random_seifert_data(rng, max_genus=2)
    current = data
    steps = []
    for _ in range(rng.randint(1, 5)):
        step = random_seifert_step(rng, current)
        current = stab_seifert(current, step)
        steps.append(step)

    for i, j in (("K1", "K1"), ("K1", "K2")):
        expect(
            seifert_lambda_t(data, i, j) == seifert_lambda_t(current, i, j),
            f"lambda_t({i}, {j}) changed",
        )
    for i, j, translates in (("K1", "K1", (0, 0)), ("K1", "K2", (1, 0))):
        expect(
            infinite_cyclic_lk(data, i, j, translates)
            == infinite_cyclic_lk(current, i, j, translates),
            f"infinite cyclic lk({i}, {j}) changed",
        )
    expect(eta_function(data, "K1") == eta_function(current, "K1"), "eta changed")
    expect(equal_up_to_unit(alexander(data.matrix), alexander(current.matrix)), "Alexander changed")
    expect(conway(data.matrix) == conway(current.matrix), "Conway changed")
    expect(
        tristram_levine(data.matrix, RootOfUnity(1, 2))
        == tristram_levine(current.matrix, RootOfUnity(1, 2)),
        "signature changed",
    )
    expect(
        lambda_kl(data, 2, 1, 1, "K1", "K2") == lambda_kl(current, 2, 1, 1, "K1", "K2"),
        "lambda^(1,1) for p = 2 changed",
    )
    if homology_order(data.matrix, 3):
        expect(
            lambda_kl(data, 3, 1, 2, "K1", "K2") == lambda_kl(current, 3, 1, 2, "K1", "K2"),
            "lambda^(1,2) for p = 3 changed",
        )
    omega = omega_avoiding(rng, alexander(data.matrix))
    before = seifert_lambda_omega(data, "K1", "K2", omega, ctx.precision, ctx.precision_cap)
    after = seifert_lambda_omega(current, "K1", "K2", omega, ctx.precision, ctx.precision_cap)
    expect(before.overlaps(after), f"lambda at {omega} changed")
    for step in reversed(steps):
        current = destabilize_seifert(current, step)
    expect(current == data, "destabilizing does not restore the data")


# Covers


@register("double-cover-p2", 100, "Goeritz data M + M^T reproduces the p = 2 branched lk")
def check_double_cover_p2(rng: random.Random, ctx: SuiteContext) -> None:
    data = random_seifert_data(rng, max_genus=3)
    goeritz = GoeritzData.build(
        data.matrix + data.matrix.transpose(), data.components, data.ambient_lk
    )
    for first, second in ((("K1", 1), ("K1", 2)), (("K1", 1), ("K2", 1)), (("K1", 2), ("K2", 1))):
        a = double_cover_lk(goeritz, first, second)
        b = p_fold_lk(data, 2, first, second)
        expect(a == b, f"{first}, {second}: Goeritz {a}, Seifert {b}")


@register("fox-formula", 50, "|det M_p| equals the product of |Delta| over p-th roots of unity")
def check_fox_formula(rng: random.Random, ctx: SuiteContext) -> None:
    m = random_seifert_matrix(rng, rng.randint(1, 3))
    for p in (2, 3, 5):
        order = homology_order(m, p)
        fox = fox_order(m, p, ctx.precision, ctx.precision_cap)
        expect(order == fox, f"p = {p}: det {order}, Fox product {fox}")


@register("omega-consistency", 50, "lambda(t) at conj(w) equals (w - 1) lambda(w)")
def check_omega_consistency(rng: random.Random, ctx: SuiteContext) -> None:
    data = random_seifert_data(rng, max_genus=2)
    omega = omega_avoiding(rng, alexander(data.matrix))
    bits = max(ctx.precision, 256)
    lam_t = seifert_lambda_t(data, "K1", "K2")
    left = eval_root_of_unity(lam_t, omega.conjugate(), bits, max(ctx.precision_cap, bits))
    lam_w = seifert_lambda_omega(data, "K1", "K2", omega, bits, max(ctx.precision_cap, bits))
    ivctx = interval_context(bits)
    factor = ComplexApprox.from_interval(iv_root_of_unity(ivctx, omega) - 1, bits)
    right = factor * lam_w
    expect(left.overlaps(right), f"{left} and {right} are disjoint at {omega}")
    expect((left - right).radius_at_most("1e-20"), "balls are wider than 1e-20")


@register("transpose-identity", 100, "lambda_ij(t) = -lambda_ji(1/t)/t and eta(t) = eta(1/t)")
def check_transpose_identity(rng: random.Random, ctx: SuiteContext) -> None:
    data = random_seifert_data(rng, max_genus=2)
    lam_ij = seifert_lambda_t(data, "K1", "K2")
    lam_ji = seifert_lambda_t(data, "K2", "K1")
    expect(
        lam_ij == -(lam_ji.substitute_inverse() * LaurentPolynomial.monomial(1, -1)),
        "transpose identity fails",
    )
    eta = eta_function(data, "K1")
    expect(eta == eta.substitute_inverse(), f"eta {eta} is not symmetric")


# Linear algebra and surgery


def _random_nonsingular_rational(rng: random.Random, n: int) -> ExactMatrix:
    while True:
        matrix = ExactMatrix(
            [[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)],
            n,
        )
        if det_exact(matrix) != 0:
            return matrix


@register("surgery-duality", 100, "B = QG and B^-1 = -QH for random slopes")
def check_surgery_duality(rng: random.Random, ctx: SuiteContext) -> None:
    n = rng.randint(1, 4)
    b = _random_nonsingular_rational(rng, n)
    q = [Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3)) for _ in range(n)]
    slopes = FillingSlopes.build(b.to_lists(), q)
    g, h = surgery_duality(slopes)
    expect(slopes.q_matrix @ g == b, "B != QG")
    expect(-(slopes.q_matrix @ h) == inverse_matrix(b), "B^-1 != -QH")


@register("surgery-symmetry", 50, "the surgery correction is symmetric in the two satellites")
def check_surgery_symmetry(rng: random.Random, ctx: SuiteContext) -> None:
    n = rng.randint(1, 4)
    a = _random_nonsingular_rational(rng, n)
    g = a + a.transpose()
    if det_exact(g) == 0:
        raise SkipSample("singular symmetric matrix")
    v1 = [rng.randint(-2, 2) for _ in range(n)]
    v2 = [rng.randint(-2, 2) for _ in range(n)]
    expect(
        surgery_lk_delta(g, v1, v2) == surgery_lk_delta(g, v2, v1), "correction is not symmetric"
    )
    expect(
        inverse_bilinear(v1, a, v2) == inverse_bilinear(v2, a.transpose(), v1),
        "transpose duality fails",
    )


@register("unimodular-split", 100, "P is unimodular and P^T A P = B + 0 with B nonsingular")
def check_unimodular_split(rng: random.Random, ctx: SuiteContext) -> None:
    rank = rng.randint(0, 3)
    corank = rng.randint(0, 3)
    if rank + corank == 0:
        raise SkipSample("empty matrix")
    while True:
        rows = [[0] * rank for _ in range(rank)]
        for i in range(rank):
            for j in range(i, rank):
                rows[i][j] = rows[j][i] = rng.randint(-3, 3)
        block = ExactMatrix(rows, rank)
        if rank == 0 or det_exact(block) != 0:
            break
    padded = ExactMatrix.block_diagonal(block, ExactMatrix.zeros(corank, corank))
    size = rank + corank
    u = random_unimodular(rng, size, steps=size) if size > 1 else ExactMatrix.identity(1)
    a = padded.congruence(u)

    p, b = unimodular_split(a)
    expect(det_exact(p) in (1, -1), "P is not unimodular")
    expect(b.rows == rank, f"block has size {b.rows}, expected {rank}")
    expect(b.rows == 0 or det_exact(b) != 0, "block is singular")
    split = ExactMatrix.block_diagonal(b, ExactMatrix.zeros(corank, corank))
    expect(a.congruence(p) == split, "not a split")
    expect(
        symmetric_signature(a).signature == symmetric_signature(b).signature, "signature changed"
    )


@register("inverse-identity", 100, "A A^-1 = A^-1 A = I for random rational matrices")
def check_inverse_identity(rng: random.Random, ctx: SuiteContext) -> None:
    n = rng.randint(1, 6)
    a = _random_nonsingular_rational(rng, n)
    inverse = inverse_matrix(a)
    identity = ExactMatrix.identity(n)
    expect(a @ inverse == identity, "A A^-1 != I")
    expect(inverse @ a == identity, "A^-1 A != I")


@register("signature-congruence", 100, "symmetric_signature is invariant under P^T A P")
def check_signature_congruence(rng: random.Random, ctx: SuiteContext) -> None:
    n = rng.randint(2, 6)
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = rng.randint(-3, 3)
    a = ExactMatrix(rows, n)
    p = random_unimodular(rng, n, steps=rng.randint(1, 2 * n))
    expect(det_exact(p) in (1, -1), "P is not unimodular")
    before = symmetric_signature(a)
    after = symmetric_signature(a.congruence(p))
    expect(before == after, f"inertia {before.render()} became {after.render()}")


def run_property(
    prop: Property,
    seed: int,
    ctx: SuiteContext,
    samples: int,
    report: CheckReport,
) -> None:
    """Run the samples of one property, recording outcomes in the report."""
    report.register(prop.name)
    for index in range(samples):
        rng = sample_rng(seed, prop.name, index)
        try:
            prop.check(rng, ctx)
        except SkipSample:
            report.increment_stat(prop.name, "skipped")
        except OmegaIsAlexanderRootError:
            report.increment_stat(prop.name, "skipped")
        except PropertyFailure as e:
            report.add_failure(prop.name, index, str(e))
        except LinkingError as e:
            report.add_failure(prop.name, index, f"{type(e).__name__}: {e}")
        else:
            report.increment_stat(prop.name, "passed")


def scaled_samples(prop: Property, scale: float) -> int:
    return max(1, round(prop.samples * scale))


def find_property(name: str) -> Optional[Property]:
    return next((prop for prop in PROPERTIES if prop.name == name), None)

