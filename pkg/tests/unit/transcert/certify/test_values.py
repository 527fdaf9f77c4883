import cmath
import math
from fractions import Fraction

import pytest

from transcert.arith.complex import BallComplex
from transcert.arith.functions import FunctionName, NamedConstant
from transcert.certify.combine import builtin_certificate, certify_lw_combination, certified_value, combine_complex
from transcert.certify.function import certify_function_value
from transcert.certify.model import Certificate, Theorem, Verdict
from transcert.certify.number import certify_number, lw_terms, power_terms
from transcert.certify.power import certify_power_product, independent_with_one
from transcert.error import (
    AllCoefficientsZero,
    DomainViolation,
    DuplicateExponents,
    InputNotCertified,
    ZeroArgument,
)
from transcert.expr import algebraic
from transcert.expr.parser import parse_expr

ROOT2 = algebraic.make_surd(Fraction(0), Fraction(1), 2)
ROOT3 = algebraic.make_surd(Fraction(0), Fraction(1), 3)


@pytest.mark.parametrize(
    "fn, a, expected",
    [
        (FunctionName.SIN, 2, math.sin(2)),
        (FunctionName.LN, 2, math.log(2)),
        (FunctionName.COSH, Fraction(1, 3), math.cosh(1 / 3)),
        (FunctionName.TAN, -1, math.tan(-1)),
    ],
)
def test_certify_function_value(fn: FunctionName, a, expected: float):
    value, certificate = certify_function_value(fn, algebraic.rational(a), 128)
    assert abs(float(value) - expected) < 1e-12
    assert certificate.theorem == Theorem.FUNCTION_VALUE
    assert certificate.verdict == Verdict.CERTIFIED
    assert certificate.value is value


def test_certify_function_value_surd():
    value, certificate = certify_function_value(FunctionName.SIN, ROOT2, 128)
    assert abs(float(value) - math.sin(math.sqrt(2))) < 1e-12
    assert certificate.subject == "sin(sqrt(2))"


def test_certify_function_value_ln_one():
    _, certificate = certify_function_value(FunctionName.LN, algebraic.ONE, 64)
    assert certificate.verdict == Verdict.REFUSED
    assert certificate.reason == "a != 1"


def test_certify_function_value_errors():
    with pytest.raises(ZeroArgument):
        certify_function_value(FunctionName.SIN, algebraic.ZERO, 64)
    with pytest.raises(DomainViolation):
        certify_function_value(FunctionName.LN, algebraic.rational(-1), 64)
    with pytest.raises(ValueError):
        certify_function_value(FunctionName.ASIN, algebraic.ONE, 64)


def test_certify_lw_combination():
    value, certificate = certify_lw_combination([Fraction(1), Fraction(1)], [algebraic.ONE, algebraic.rational(2)], 128)
    assert abs(float(value) - (math.e + math.e**2)) < 1e-12
    assert certificate.verdict == Verdict.CERTIFIED
    assert certificate.subject == "1*e^(1) + 1*e^(2)"


def test_certify_lw_combination_zero_exponent():
    _, certificate = certify_lw_combination([Fraction(3)], [algebraic.ZERO], 64)
    assert certificate.verdict == Verdict.REFUSED
    assert certificate.reason == "alpha_1..alpha_n are non-zero"


def test_certify_lw_combination_errors():
    with pytest.raises(DuplicateExponents):
        certify_lw_combination([Fraction(1), Fraction(2)], [ROOT2, ROOT2], 64)
    with pytest.raises(AllCoefficientsZero):
        certify_lw_combination([Fraction(0), Fraction(0)], [algebraic.ONE, ROOT2], 64)
    with pytest.raises(ValueError):
        certify_lw_combination([Fraction(1)], [], 64)


def test_certify_power_product():
    value, certificate = certify_power_product([algebraic.rational(2)], [ROOT2], 128)
    assert abs(float(value) - 2 ** math.sqrt(2)) < 1e-12
    assert certificate.theorem == Theorem.GSB
    assert certificate.verdict == Verdict.CERTIFIED


def test_certify_power_product_negative_base():
    value, certificate = certify_power_product([algebraic.rational(-2)], [ROOT2], 128)
    assert isinstance(value, BallComplex)
    expected = cmath.exp(math.sqrt(2) * cmath.log(-2))
    assert abs(complex(float(value.re), float(value.im)) - expected) < 1e-12
    assert certificate.verdict == Verdict.CERTIFIED


@pytest.mark.parametrize(
    "alphas, betas, reason",
    [
        ([algebraic.ONE], [ROOT2], "alpha_1..alpha_n are algebraic and not 0 or 1"),
        ([algebraic.rational(2)], [algebraic.rational(Fraction(1, 2))], "beta_1..beta_n are irrational"),
        (
            [algebraic.rational(2), algebraic.rational(3)],
            [ROOT2, algebraic.negate(ROOT2)],
            "1, beta_1..beta_n are linearly independent over Q",
        ),
    ],
)
def test_certify_power_product_refused(alphas: list, betas: list, reason: str):
    _, certificate = certify_power_product(alphas, betas, 64)
    assert certificate.verdict == Verdict.REFUSED
    assert certificate.reason == reason


@pytest.mark.parametrize(
    "betas, expected",
    [
        ([ROOT2], True),
        ([algebraic.rational(3)], False),
        ([ROOT2, ROOT3], True),
        ([ROOT2, algebraic.make_surd(Fraction(1), Fraction(3), 2)], False),
        ([ROOT2, algebraic.rational(Fraction(1, 2))], False),
    ],
)
def test_independent_with_one(betas: list, expected: bool):
    assert independent_with_one(betas) == expected


def test_builtin_certificate():
    certificate = builtin_certificate(NamedConstant.PI, 64)
    assert certificate.theorem == Theorem.BUILTIN
    assert certificate.verdict == Verdict.CERTIFIED
    assert certificate.subject == "pi"
    assert abs(float(certificate.value) - math.pi) < 1e-15


def test_combine_complex():
    e = builtin_certificate(NamedConstant.E, 128)
    pi = builtin_certificate(NamedConstant.PI, 128)
    certificate = combine_complex(e, pi, sign=-1)
    assert certificate.theorem == Theorem.PROP1
    assert certificate.verdict == Verdict.CERTIFIED
    assert certificate.inputs == (e, pi)
    assert certificate.subject == "(e) - (pi)i"
    value = certified_value(certificate)
    assert abs(float(value.re) - math.e) < 1e-15
    assert abs(float(value.im) + math.pi) < 1e-15
    assert len(certificate.to_json()["inputs"]) == 2


def test_combine_complex_rejects_uncertified_input():
    _, refused = certify_function_value(FunctionName.LN, algebraic.ONE, 64)
    with pytest.raises(InputNotCertified):
        combine_complex(builtin_certificate(NamedConstant.E, 64), refused)
    with pytest.raises(ValueError):
        combine_complex(builtin_certificate(NamedConstant.E, 64), builtin_certificate(NamedConstant.PI, 64), sign=2)


def test_combine_complex_non_real_input():
    # A complex input can't be one of the real parts
    _, gsb = certify_power_product([algebraic.rational(-2)], [ROOT2], 64)
    certificate = combine_complex(gsb, builtin_certificate(NamedConstant.E, 64))
    assert certificate.verdict == Verdict.REFUSED
    assert certificate.reason == "tau_1 and tau_2 are real"
    assert certificate.value is None


def test_certified_value_requires_value_or_root():
    with pytest.raises(InputNotCertified):
        certified_value(Certificate(theorem=Theorem.BUILTIN, checks=(), verdict=Verdict.CERTIFIED))


@pytest.mark.parametrize(
    "text, expected_theorem, expected_value",
    [
        ("e", Theorem.BUILTIN, math.e),
        ("pi", Theorem.BUILTIN, math.pi),
        ("sin(2)", Theorem.FUNCTION_VALUE, math.sin(2)),
        ("ln(2)", Theorem.FUNCTION_VALUE, math.log(2)),
        ("e + e^2", Theorem.LW, math.e + math.e**2),
        ("3*e^(1/2) - e/2", Theorem.LW, 3 * math.exp(0.5) - math.e / 2),
        ("exp(sqrt(2)) / 4", Theorem.LW, math.exp(math.sqrt(2)) / 4),
        ("2^sqrt(2)", Theorem.GSB, 2 ** math.sqrt(2)),
        ("2^sqrt(2) * 3^sqrt(3)", Theorem.GSB, 2 ** math.sqrt(2) * 3 ** math.sqrt(3)),
    ],
)
def test_certify_number(text: str, expected_theorem: Theorem, expected_value: float):
    certificate = certify_number(parse_expr(text), 128)
    assert certificate.theorem == expected_theorem
    assert certificate.verdict == Verdict.CERTIFIED
    assert abs(float(certified_value(certificate)) - expected_value) < 1e-12


@pytest.mark.parametrize(
    "text, expected_error",
    [
        ("x + 1", InputNotCertified),
        ("3/4", InputNotCertified),
        ("sqrt(2)", InputNotCertified),
        ("e * pi", InputNotCertified),
        ("sin(0)", ZeroArgument),
        ("e - e", DuplicateExponents),
        ("0*e", AllCoefficientsZero),
    ],
)
def test_certify_number_errors(text: str, expected_error: type):
    with pytest.raises(expected_error):
        certify_number(parse_expr(text), 64)


def test_lw_terms():
    assert lw_terms(parse_expr("2*e^3 - e")) == [(Fraction(2), algebraic.rational(3)), (Fraction(-1), algebraic.ONE)]
    assert lw_terms(parse_expr("e^x")) is None
    assert lw_terms(parse_expr("pi")) is None


def test_power_terms():
    assert power_terms(parse_expr("2^sqrt(2)")) == [(algebraic.rational(2), ROOT2)]
    assert power_terms(parse_expr("2^3")) is None
