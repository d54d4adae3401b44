"""
Tests for exact rationals, Laurent polynomials, rational functions and certified balls.
"""

from fractions import Fraction

import pytest

from src.errors import (
    DenominatorVanishesError,
    DivisionByZeroError,
    InputError,
    ZeroPolynomialError,
)
from src.exact import (
    ComplexApprox,
    LaurentPolynomial,
    RationalFunction,
    RootOfUnity,
    cyclotomic_vanishes,
    equal_up_to_unit,
    eval_root_of_unity,
    laurent_canonical_unit,
    parse_laurent,
    parse_rational,
    parse_rational_function,
    ratfun_reduce,
    render_rational,
)
from src.exact.balls import escalate, precision_ladder


class TestRational:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("3", Fraction(3)),
            ("-2/3", Fraction(-2, 3)),
            ("4/6", Fraction(2, 3)),
            (" 7 / 2 ", Fraction(7, 2)),
            ("−5/3", Fraction(-5, 3)),
            (-4, Fraction(-4)),
        ],
    )
    def test_parse(self, text, expected):
        assert parse_rational(text) == expected

    @pytest.mark.parametrize("text", ["", "1/", "a/b", "1.5", True, None])
    def test_parse_rejects(self, text):
        with pytest.raises(InputError):
            parse_rational(text)

    def test_zero_denominator(self):
        with pytest.raises(DivisionByZeroError):
            parse_rational("1/0")

    def test_render(self):
        assert render_rational(Fraction(-2, 3)) == "-2/3"
        assert render_rational(Fraction(6, 3)) == "2"
        assert render_rational(0) == "0"


class TestLaurent:
    def test_zero_has_no_terms(self):
        assert LaurentPolynomial({0: 0, 3: 0}).is_zero()
        assert LaurentPolynomial().render() == "0"

    def test_render(self, trefoil_delta):
        assert trefoil_delta.render() == "1 - t + t^2"
        assert LaurentPolynomial({-1: 2, 0: -3, 1: 2}).render() == "2*t^-1 - 3 + 2*t"
        assert LaurentPolynomial({2: 1, 0: 1}).render("z") == "1 + z^2"

    def test_parse_inverts_render(self, trefoil_delta):
        assert parse_laurent("1 - t + t^2") == trefoil_delta
        assert parse_laurent("2*t^-1 - 3 + 2*t") == LaurentPolynomial({-1: 2, 0: -3, 1: 2})
        assert parse_laurent("−1 + 3*t − t^2") == LaurentPolynomial({0: -1, 1: 3, 2: -1})

    def test_parse_rejects_fractions(self):
        with pytest.raises(InputError):
            parse_laurent("t/2")

    def test_arithmetic(self):
        t = LaurentPolynomial.t()
        assert (1 - t) * (1 - t) == LaurentPolynomial({0: 1, 1: -2, 2: 1})
        assert t ** -2 == LaurentPolynomial({-2: 1})
        assert (t - 1).substitute_inverse() == LaurentPolynomial({-1: 1, 0: -1})
        assert (t * t - 1).exquo(t - 1) == t + 1

    @pytest.mark.parametrize(
        "terms, expected",
        [
            ({}, 0),
            ({0: -4}, 4),
            ({-1: 6, 0: -9, 3: 15}, 3),
            ({0: 2, 1: -3, 2: 2}, 1),
        ],
    )
    def test_content(self, terms, expected):
        assert LaurentPolynomial(terms).content() == expected

    def test_exquo_not_exact(self):
        t = LaurentPolynomial.t()
        with pytest.raises(ArithmeticError):
            (t + 2).exquo(t - 1)

    @pytest.mark.parametrize(
        "terms, expected",
        [
            ({2: 1, 1: -1, 0: 1}, {0: 1, 1: -1, 2: 1}),
            ({-1: -1, 0: 1}, {0: 1, 1: -1}),
            ({2: -1, 1: 3, 0: -1}, {0: -1, 1: 3, 2: -1}),
        ],
    )
    def test_canonical_unit(self, terms, expected):
        assert laurent_canonical_unit(LaurentPolynomial(terms)) == LaurentPolynomial(expected)

    def test_canonical_unit_of_zero(self):
        with pytest.raises(ZeroPolynomialError):
            laurent_canonical_unit(LaurentPolynomial())

    def test_equal_up_to_unit(self):
        t = LaurentPolynomial.t()
        assert equal_up_to_unit(t - 1, 1 - LaurentPolynomial.monomial(1, -1))
        assert not equal_up_to_unit(t - 1, t + 1)
        assert equal_up_to_unit(
            LaurentPolynomial({0: 2, 1: -3, 2: 2}), LaurentPolynomial({-1: 2, 0: -3, 1: 2})
        )


class TestRationalFunction:
    def test_reduce_cancels_common_factor(self):
        t = LaurentPolynomial.t()
        reduced = ratfun_reduce(t - 1, t * t - t)
        assert reduced.numerator == LaurentPolynomial({-1: 1})
        assert reduced.denominator == 1

    def test_reduce_zero(self):
        reduced = ratfun_reduce(LaurentPolynomial(), LaurentPolynomial.constant(5))
        assert reduced.is_zero()
        assert reduced.denominator == 1

    def test_coprime_pair_unchanged(self, one_minus_t, trefoil_delta):
        reduced = ratfun_reduce(one_minus_t * one_minus_t, trefoil_delta)
        assert reduced.numerator == one_minus_t * one_minus_t
        assert reduced.denominator == trefoil_delta

    def test_denominator_is_normalized(self, one_minus_t, trefoil_delta):
        reduced = ratfun_reduce(-one_minus_t, -trefoil_delta)
        assert reduced == ratfun_reduce(one_minus_t, trefoil_delta)
        assert reduced.denominator.lowest_coefficient > 0

    def test_zero_denominator(self):
        with pytest.raises(DivisionByZeroError):
            ratfun_reduce(LaurentPolynomial.constant(1), LaurentPolynomial())

    def test_field_arithmetic(self, trefoil_lambda):
        inverse = trefoil_lambda.inverse()
        assert trefoil_lambda * inverse == RationalFunction.one()
        assert trefoil_lambda - trefoil_lambda == RationalFunction.zero()
        assert (trefoil_lambda + 1) - 1 == trefoil_lambda

    def test_substitute_inverse_twice(self, trefoil_lambda):
        assert trefoil_lambda.substitute_inverse().substitute_inverse() == trefoil_lambda

    def test_evaluate(self, trefoil_lambda):
        assert trefoil_lambda.evaluate(-1) == Fraction(2, 3)
        assert trefoil_lambda.evaluate(2) == Fraction(-1, 3)

    def test_render_and_parse(self, trefoil_lambda):
        assert trefoil_lambda.render() == "(1 - t)/(1 - t + t^2)"
        assert parse_rational_function(trefoil_lambda.render()) == trefoil_lambda


class TestRootOfUnity:
    def test_angle_is_reduced(self):
        omega = RootOfUnity(2, 4)
        assert (omega.numerator, omega.denominator) == (1, 2)
        assert omega.is_minus_one()

    @pytest.mark.parametrize("angle", ["0", "1", "3/2", "-1/3"])
    def test_angle_range(self, angle):
        with pytest.raises(InputError):
            RootOfUnity.from_angle(angle)

    def test_conjugate_and_power(self):
        omega = RootOfUnity.from_angle("1/6")
        assert omega.conjugate() == RootOfUnity(5, 6)
        assert omega.power(3) == RootOfUnity(1, 2)
        assert omega.power(6) is None

    def test_cyclotomic_vanishes(self, trefoil_delta):
        assert cyclotomic_vanishes(trefoil_delta, RootOfUnity(1, 6))
        assert cyclotomic_vanishes(trefoil_delta, RootOfUnity(5, 6))
        assert not cyclotomic_vanishes(trefoil_delta, RootOfUnity(1, 2))
        assert not cyclotomic_vanishes(trefoil_delta, RootOfUnity(1, 3))


class TestBalls:
    def test_eval_at_minus_one(self, trefoil_lambda, minus_one):
        value = eval_root_of_unity(trefoil_lambda, minus_one)
        assert value.contains(Fraction(2, 3))
        assert not value.contains(Fraction(2, 3) + Fraction(1, 10**20))
        assert value.radius_at_most("1e-30")

    def test_eval_constant_is_exact(self):
        value = eval_root_of_unity(1, RootOfUnity(1, 5))
        assert value.contains(1)
        assert value.error_radius == 0

    def test_eval_at_pole(self, trefoil_delta):
        pole = ratfun_reduce(LaurentPolynomial.constant(1), trefoil_delta)
        with pytest.raises(DenominatorVanishesError):
            eval_root_of_unity(pole, RootOfUnity(1, 6))

    def test_eval_at_third_root(self):
        # 1 + w + w^2 = 0 at a primitive third root
        omega = RootOfUnity(1, 3)
        low = eval_root_of_unity(LaurentPolynomial({0: 1, 1: 1}), omega)
        square = eval_root_of_unity(LaurentPolynomial({2: 1}), omega)
        assert (low + square).contains_zero()
        assert not low.contains_zero()

    def test_ball_arithmetic(self):
        third = ComplexApprox.from_rational(Fraction(1, 3))
        total = third + third + third
        assert total.contains(1)
        assert (total - 1).contains_zero()
        assert (third * 3).compare_real(Fraction(1, 2)) == 1
        assert (-third).real_sign() == -1

    def test_nearest_integer(self):
        assert ComplexApprox.from_rational(Fraction(7, 2) + Fraction(1, 3)).nearest_integer() == 4
        assert ComplexApprox.from_rational(Fraction(7, 2)).nearest_integer() is None

    def test_json_form(self):
        payload = ComplexApprox.from_integer(-3).to_json()
        assert payload["real"] == "-3.0"
        assert payload["imag"] == "0.0"
        assert payload["precision_bits"] == 128


class TestEscalation:
    def test_ladder_doubles_up_to_cap(self):
        assert list(precision_ladder(64, 300)) == [64, 128, 256, 300]

    def test_escalate_returns_first_decided(self):
        seen = []

        def compute(bits):
            seen.append(bits)
            return "done" if bits >= 256 else None

        assert escalate(compute, 64, 1024) == "done"
        assert seen == [64, 128, 256]

    def test_escalate_gives_up_at_cap(self):
        assert escalate(lambda bits: None, 64, 128) is None
