"""Hypothesis suites for equations built from a single trigonometric / hyperbolic / logarithmic / arc function
and for values f(a) at nonzero algebraic points"""

import logging

from transcert.arith.functions import Ball, FunctionName, ball_unary
from transcert.certify.exponential import polynomial_at
from transcert.certify.model import Check, Certificate, Theorem, make_certificate
from transcert.certify.nonzero import Quantity, RootRefiner, nonzero_check, root_value, structural_check
from transcert.error import ZeroArgument
from transcert.expr import algebraic
from transcert.expr.algebraic import AlgebraicNumber
from transcert.expr.forms import COR1_FUNCTIONS, Cor2Form, Cor3Form, FormKind, FunctionPolyForm
from transcert.expr.polynomial import Polynomial

logger = logging.getLogger(__name__)

COROLLARY5_MAX_DEGREE = 4  # Equations of degree <= 4 in f are solvable by radicals


def _function_at(fn: FunctionName) -> Quantity:
    def quantity(z: Ball, prec: int) -> Ball:
        return ball_unary(fn, z)

    return quantity


def _polynomial_of_function(poly: Polynomial, fn: FunctionName) -> Quantity:
    """poly(fn(z))"""

    def quantity(z: Ball, prec: int) -> Ball:
        return poly.evaluate(ball_unary(fn, z), prec)

    return quantity


def _function_of_polynomial(fn: FunctionName, poly: Polynomial) -> Quantity:
    """fn(poly(z))"""

    def quantity(z: Ball, prec: int) -> Ball:
        return ball_unary(fn, poly.evaluate(z, prec))

    return quantity


def _rational_check(name: str, *polys: Polynomial) -> Check:
    return structural_check(name, all(p.is_rational() for p in polys), "a coefficient is irrational")


def function_poly_checks(form: FunctionPolyForm, refiner: RootRefiner) -> list[Check]:
    """g(f(x)) = h(x). The degree bounded variant additionally needs h(root) != 0"""
    checks: list[Check] = []
    if form.kind == FormKind.COR5:
        checks.append(
            structural_check(
                f"1 <= deg(g) <= {COROLLARY5_MAX_DEGREE}",
                1 <= form.g.degree <= COROLLARY5_MAX_DEGREE,
                f"deg(g) = {form.g.degree}",
            )
        )
    checks.extend(
        [
            _rational_check("g and h have rational coefficients", form.g, form.h),
            nonzero_check("root != 0", root_value, refiner),
            nonzero_check("f(root) != 0", _function_at(form.fn), refiner),
            nonzero_check("g(f(root)) != 0", _polynomial_of_function(form.g, form.fn), refiner),
        ]
    )
    if form.kind == FormKind.COR5:
        checks.append(nonzero_check("h(root) != 0", polynomial_at(form.h), refiner))
    return checks


def cor2_checks(form: Cor2Form, refiner: RootRefiner) -> list[Check]:
    """h1(x) f(g(x)) = h2(x)"""
    return [
        _rational_check("g, h1 and h2 have rational coefficients", form.g, form.h1, form.h2),
        nonzero_check("root != 0", root_value, refiner),
        nonzero_check("h1(root) != 0", polynomial_at(form.h1), refiner),
        nonzero_check("g(root) != 0", polynomial_at(form.g), refiner),
        nonzero_check("f(g(root)) != 0", _function_of_polynomial(form.fn, form.g), refiner),
        nonzero_check("h2(root) != 0", polynomial_at(form.h2), refiner),
    ]


def cor3_checks(form: Cor3Form, refiner: RootRefiner) -> list[Check]:
    """arcfn(x) = f(x)"""
    return [
        _rational_check("f has rational coefficients", form.f),
        nonzero_check("root != 0", root_value, refiner),
        nonzero_check("f(root) != 0", polynomial_at(form.f), refiner),
    ]


def certify_function_value(fn: FunctionName, a: AlgebraicNumber, prec: int) -> tuple[Ball, Certificate]:
    """Encloses fn(a) for a nonzero algebraic a and certifies it transcendental.

    Raises ZeroArgument for a = 0 and DomainViolation (from the ball functions) when a lies outside the domain of
    fn, eg: ln of a negative number."""
    if fn not in COR1_FUNCTIONS:
        raise ValueError(f"{fn} isn't one of {', '.join(sorted(COR1_FUNCTIONS))}")
    if algebraic.is_zero(a):
        raise ZeroArgument(f"{fn}(0) is algebraic - a nonzero argument is required")

    value = ball_unary(fn, algebraic.enclosure(a, prec))
    checks = [
        structural_check("a is a non-zero algebraic number", True),
        structural_check(f"{fn} is ln or a trigonometric / hyperbolic function", True),
    ]
    if fn == FunctionName.LN:
        checks.append(structural_check("a != 1", not algebraic.is_one(a), "ln(1) = 0"))
    subject = f"{fn}({algebraic.to_text(a)})"
    logger.info(f"{subject} = {value}")
    return value, make_certificate(Theorem.FUNCTION_VALUE, checks, value=value, subject=subject)
