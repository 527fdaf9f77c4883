import cmath
import math
from fractions import Fraction

import pytest

from transcert.arith.complex import BallComplex
from transcert.arith.real import BallReal
from transcert.error import ArithmeticFailure, DivisorMayBeZero, DomainViolation
from transcert.expr.evaluate import evaluate, evaluate_complex, evaluate_real
from transcert.expr.parser import parse_expr


@pytest.mark.parametrize(
    "text, x, expected",
    [
        ("e^x + x - 12", Fraction(2), math.e**2 - 10),
        ("sin(x) - 1 + x", Fraction(1, 2), math.sin(0.5) - 0.5),
        ("2^x + 3^x", Fraction(3, 2), 2**1.5 + 3**1.5),
        ("x^x", Fraction(2), 4.0),
        ("ln(x) / sqrt(x)", Fraction(4), math.log(4) / 2),
        ("e + e^2", Fraction(0), math.e + math.e**2),
        ("pi * x", Fraction(-1), -math.pi),
        ("atan(x) + cosh(x)", Fraction(1, 3), math.atan(1 / 3) + math.cosh(1 / 3)),
    ],
)
def test_evaluate_real(text: str, x: Fraction, expected: float):
    value = evaluate_real(parse_expr(text), BallReal.exact(x, 128), 128)
    assert abs(float(value) - expected) < 1e-12
    assert value.width() < 2**-90


@pytest.mark.parametrize(
    "text, z, expected",
    [
        ("x^2 + 1", (0, 1), 0j),
        ("e^x", (0, 1), cmath.exp(1j)),
        ("x^3 - 2*x + 1", (1, -2), (1 - 2j) ** 3 - 2 * (1 - 2j) + 1),
        ("sin(x) / x", (1, 1), cmath.sin(1 + 1j) / (1 + 1j)),
    ],
)
def test_evaluate_complex(text: str, z: tuple, expected: complex):
    value = evaluate_complex(parse_expr(text), BallComplex.exact(z[0], z[1], 128), 128)
    assert abs(complex(float(value.re), float(value.im)) - expected) < 1e-12


def test_evaluate_real_input_stays_real():
    value = evaluate(parse_expr("x^2"), BallReal.exact(3, 64), 64)
    assert isinstance(value, BallReal)
    assert value.contains(9)


def test_evaluate_encloses_over_wide_ball():
    value = evaluate_real(parse_expr("x^2 - 2"), BallReal.from_bounds(1, 2, 64), 64)
    assert value.contains(-1)
    assert value.contains(2)


@pytest.mark.parametrize(
    "text, x, expected_error, path",
    [
        ("1 / x", Fraction(0), DivisorMayBeZero, ()),
        ("x + ln(x - 1)", Fraction(1), DomainViolation, (1,)),
        ("sqrt(x) * 2 - asin(x)", Fraction(2), DomainViolation, (1,)),
    ],
)
def test_evaluate_failure_path(text: str, x: Fraction, expected_error: type, path: tuple[int, ...]):
    with pytest.raises(expected_error) as exc_info:
        evaluate_real(parse_expr(text), BallReal.exact(x, 64), 64)
    assert exc_info.value.path == path


def test_evaluate_real_rejects_complex_value():
    with pytest.raises(ArithmeticFailure):
        evaluate_real(parse_expr("x"), BallComplex.exact(0, 1, 64), 64)  # type: ignore
