"""Hypothesis suites for the exponential families: exponential polynomials, (f(x) + a1)^k = g(x) and
Lindemann-Weierstrass combinations"""

from fractions import Fraction
from itertools import combinations

from transcert.arith.functions import Ball, FunctionName, ball_unary
from transcert.certify.model import Check
from transcert.certify.nonzero import (
    Quantity,
    RootRefiner,
    all_nonzero_check,
    any_nonzero_check,
    nonzero_check,
    root_value,
    structural_check,
)
from transcert.expr import algebraic
from transcert.expr.algebraic import AlgebraicNumber
from transcert.expr.forms import Cor4Form, Thm2Form
from transcert.expr.polynomial import Polynomial


def polynomial_at(poly: Polynomial) -> Quantity:
    def quantity(z: Ball, prec: int) -> Ball:
        return poly.evaluate(z, prec)

    return quantity


def _exponent_at(alpha: AlgebraicNumber, f: Polynomial) -> Quantity:
    def quantity(z: Ball, prec: int) -> Ball:
        return algebraic.enclosure(alpha, prec) * f.evaluate(z, prec)

    return quantity


def _difference(a: Quantity, b: Quantity) -> Quantity:
    def quantity(z: Ball, prec: int) -> Ball:
        return a(z, prec) - b(z, prec)

    return quantity


def pairwise_distinct(values: list[AlgebraicNumber]) -> bool | None:
    """True if no two values are equal, None if some pair can't be told apart"""
    undecided = False
    for x, y in combinations(values, 2):
        equal = algebraic.algebraic_equal(x, y)
        if equal is True:
            return False
        if equal is None:
            undecided = True
    return None if undecided else True


def distinct_check(name: str, values: list[AlgebraicNumber]) -> Check:
    return structural_check(name, pairwise_distinct(values), "two of the values coincide (or can't be separated)")


def thm2_checks(form: Thm2Form, refiner: RootRefiner, strict: bool) -> list[Check]:
    alphas = [t.alpha for t in form.terms]
    checks = [
        structural_check("alpha_1..alpha_m are algebraic", True),
        structural_check("alpha_1..alpha_m are non-zero", not any(algebraic.is_zero(a) for a in alphas)),
        distinct_check("alpha_1..alpha_m are distinct", alphas),
        structural_check("f is not the zero polynomial", not form.f.is_zero()),
        nonzero_check("root != 0", root_value, refiner),
        any_nonzero_check(
            "f_i(root) != 0 != g_i(root) for some i",
            [[polynomial_at(t.f), polynomial_at(t.g)] for t in form.terms],
            refiner,
        ),
        nonzero_check("f(root) != 0", polynomial_at(form.f), refiner),
    ]

    if strict:
        exponents = [_exponent_at(t.alpha, t.f) for t in form.terms]
        differences = [_difference(a, b) for a, b in combinations(exponents, 2)]
        if differences:
            checks.append(
                all_nonzero_check("alpha_i f_i(root) are pairwise distinct", differences, refiner),
            )
        else:
            checks.append(structural_check("alpha_i f_i(root) are pairwise distinct", True))
    return checks


def _exp_function(fn: FunctionName, j: int) -> Quantity:
    def quantity(z: Ball, prec: int) -> Ball:
        return ball_unary(fn, z if j == 1 else z**j)

    return quantity


def cor4_checks(form: Cor4Form, refiner: RootRefiner) -> list[Check]:
    return [
        structural_check("g has rational coefficients", form.g.is_rational()),
        structural_check("a1 is algebraic", True),
        structural_check("k is a positive integer", form.k >= 1),
        nonzero_check("root != 0", root_value, refiner),
        nonzero_check("f(root) != 0", _exp_function(form.fn, form.j), refiner),
        nonzero_check("g(root) != 0", polynomial_at(form.g), refiner),
    ]


def lw_checks(coefficients: list[Fraction], alphas: list[AlgebraicNumber]) -> list[Check]:
    return [
        structural_check("alpha_1..alpha_n are algebraic", True),
        structural_check("alpha_1..alpha_n are non-zero", not any(algebraic.is_zero(a) for a in alphas)),
        distinct_check("alpha_1..alpha_n are distinct", alphas),
        structural_check("c_1..c_n are not all zero", any(c != 0 for c in coefficients)),
    ]


def lw_value(coefficients: list[Fraction], alphas: list[AlgebraicNumber], prec: int) -> Ball:
    """sum c_i e^{alpha_i} as a ball at prec"""
    total: Ball | None = None
    for c, alpha in zip(coefficients, alphas):
        term = ball_unary(FunctionName.EXP, algebraic.enclosure(alpha, prec)) * algebraic.enclosure(
            algebraic.rational(c), prec
        )
        total = term if total is None else total + term
    if total is None:
        raise ValueError("A Lindemann-Weierstrass combination needs at least one term")
    return total

