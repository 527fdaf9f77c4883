from fractions import Fraction

import pytest

from transcert.arith.real import BallReal
from transcert.error import NotRepresentable
from transcert.expr import algebraic
from transcert.expr.parser import parse_expr
from transcert.expr.polynomial import Polynomial, fold_constant, from_expr


def test_normalised():
    assert Polynomial.of(1, 2, 0, 0) == Polynomial.of(1, 2)
    assert Polynomial.of(0, 0).is_zero()
    assert Polynomial.of().degree == -1
    assert Polynomial.of(5).is_constant()
    assert Polynomial.x().is_x()
    assert Polynomial.of(3, 1).is_monic()
    assert not Polynomial.of(3, 2).is_monic()


def test_arithmetic():
    p = Polynomial.of(1, 1)  # x + 1
    q = Polynomial.of(-1, 1)  # x - 1
    assert p * q == Polynomial.of(-1, 0, 1)
    assert p + q == Polynomial.of(0, 2)
    assert p - q == Polynomial.of(2)
    assert p.power(3) == Polynomial.of(1, 3, 3, 1)
    assert Polynomial.of(1, 2, 3).derivative() == Polynomial.of(2, 6)
    assert p * Polynomial.of() == Polynomial.of()


def test_monic_split():
    lead, monic = Polynomial.of(2, 4).monic_split()
    assert lead == algebraic.rational(4)
    assert monic == Polynomial.of(Fraction(1, 2), 1)


def test_constant_value():
    assert Polynomial.of(7).constant_value() == algebraic.rational(7)
    with pytest.raises(ValueError):
        Polynomial.x().constant_value()


@pytest.mark.parametrize(
    "text, expected",
    [
        ("x^2 + 10*x + 5", Polynomial.of(5, 10, 1)),
        ("(x + 1)^2 - x^2", Polynomial.of(1, 2)),
        ("x / 4", Polynomial.of(0, Fraction(1, 4))),
        ("2^-1 * x", Polynomial.of(0, Fraction(1, 2))),
        ("3", Polynomial.of(3)),
        ("x - x", Polynomial.of()),
    ],
)
def test_from_expr(text: str, expected: Polynomial):
    assert from_expr(parse_expr(text)) == expected


@pytest.mark.parametrize("text", ["sin(x)", "1 / x", "x^(1/2)", "e * x", "pi", "sqrt(x)", "x^-1"])
def test_from_expr_rejects(text: str):
    assert from_expr(parse_expr(text)) is None


def test_from_expr_surd_coefficients():
    poly = from_expr(parse_expr("sqrt(2)*x + sqrt(8)"))
    assert poly is not None
    root2 = algebraic.make_surd(Fraction(0), Fraction(1), 2)
    assert poly.coefficient(1) == root2
    assert poly.coefficient(0) == algebraic.make_surd(Fraction(0), Fraction(2), 2)
    assert not poly.is_rational()


def test_from_expr_not_representable():
    with pytest.raises(NotRepresentable):
        from_expr(parse_expr("sqrt(2) + sqrt(3)"))


@pytest.mark.parametrize(
    "text, expected",
    [
        ("2^10", algebraic.rational(1024)),
        ("(1/2)^-2", algebraic.rational(4)),
        ("sqrt(12)", algebraic.make_surd(Fraction(0), Fraction(2), 3)),
        ("sqrt(9/4)", algebraic.rational(Fraction(3, 2))),
        ("1 - 1", algebraic.ZERO),
    ],
)
def test_fold_constant(text: str, expected):
    assert fold_constant(parse_expr(text)) == expected


@pytest.mark.parametrize("text", ["x", "pi", "e", "sin(1)", "2^(1/2)"])
def test_fold_constant_rejects(text: str):
    assert fold_constant(parse_expr(text)) is None


def test_evaluate():
    value = Polynomial.of(5, 10, 1).evaluate(BallReal.exact(Fraction(1, 2), 64), 64)
    assert value.contains(Fraction(41, 4))
    assert Polynomial.of().evaluate(BallReal.exact(3, 64), 64).is_exact_zero()


@pytest.mark.parametrize("poly", [Polynomial.of(5, 10, 1), Polynomial.of(0, -1), Polynomial.of(Fraction(-1, 3), 0, 2)])
def test_to_expr_round_trip(poly: Polynomial):
    assert from_expr(poly.to_expr()) == poly
    assert from_expr(parse_expr(str(poly))) == poly
