"""Certificates for numbers that aren't roots of a classified equation: Lindemann-Weierstrass combinations,
tau_1 +/- tau_2 i pairs and the built-in constants"""

import logging
from fractions import Fraction
from itertools import combinations

from transcert.arith.complex import BallComplex
from transcert.arith.functions import Ball, NamedConstant, const
from transcert.arith.real import BallReal
from transcert.certify.exponential import lw_checks, lw_value, pairwise_distinct
from transcert.certify.model import Certificate, Theorem, make_certificate
from transcert.certify.nonzero import structural_check
from transcert.error import AllCoefficientsZero, DuplicateExponents, InputNotCertified
from transcert.expr import algebraic
from transcert.expr.algebraic import AlgebraicNumber

logger = logging.getLogger(__name__)


def _fraction_text(value: Fraction) -> str:
    return algebraic.to_text(algebraic.rational(value))


def certify_lw_combination(
    coefficients: list[Fraction], alphas: list[AlgebraicNumber], prec: int
) -> tuple[Ball, Certificate]:
    """Encloses c_1 e^{alpha_1} + ... + c_n e^{alpha_n} and certifies it transcendental.

    Raises DuplicateExponents if two alpha_i are (exactly) equal and AllCoefficientsZero if every c_i is zero.
    A zero alpha_i is refused rather than raised."""
    if len(coefficients) != len(alphas) or not alphas:
        raise ValueError("coefficients and exponents must be non empty and of equal length")
    for x, y in combinations(alphas, 2):
        if algebraic.algebraic_equal(x, y) is True:
            raise DuplicateExponents(f"Exponent {algebraic.to_text(x)} appears more than once")
    if pairwise_distinct(alphas) is None:
        logger.warning("Unable to separate every pair of exponents - the certificate will be Undecided")
    if all(c == 0 for c in coefficients):
        raise AllCoefficientsZero("At least one coefficient must be non-zero")

    value = lw_value(coefficients, alphas, prec)
    subject = " + ".join(
        f"{_fraction_text(c)}*e^({algebraic.to_text(a)})" for c, a in zip(coefficients, alphas)
    ).replace("+ -", "- ")
    certificate = make_certificate(Theorem.LW, lw_checks(coefficients, alphas), value=value, subject=subject)
    logger.info(f"{subject} = {value}: {certificate.verdict}")
    return value, certificate


def certified_value(certificate: Certificate) -> BallReal | BallComplex:
    """The number a certificate vouches for: its value, else its root"""
    if certificate.value is not None:
        return certificate.value
    if certificate.root is not None:
        return certificate.root.box
    raise InputNotCertified("Certificate carries neither a value nor a root")


def _real_part(value: BallReal | BallComplex) -> BallReal | None:
    if isinstance(value, BallReal):
        return value
    if value.im.is_exact_zero():
        return value.re
    return None


def _describe(certificate: Certificate) -> str:
    if certificate.subject is not None:
        return certificate.subject
    if certificate.equation_text is not None:
        return f"root of {certificate.equation_text}"
    return str(certificate.theorem)


def combine_complex(first: Certificate, second: Certificate, sign: int = 1) -> Certificate:
    """Certificate for tau_1 + tau_2 i (sign = 1) or tau_1 - tau_2 i (sign = -1) from certificates for tau_1 and
    tau_2. Raises InputNotCertified unless both inputs are Certified."""
    if sign not in (1, -1):
        raise ValueError(f"sign must be 1 or -1 (got {sign})")
    for label, certificate in (("first", first), ("second", second)):
        if not certificate.is_certified():
            raise InputNotCertified(f"The {label} input is {certificate.verdict} ({certificate.reason}), not Certified")

    tau_1, tau_2 = _real_part(certified_value(first)), _real_part(certified_value(second))
    checks = [
        structural_check("tau_1 is transcendental", True),
        structural_check("tau_2 is transcendental", True),
        structural_check(
            "tau_1 and tau_2 are real", tau_1 is not None and tau_2 is not None, "an input isn't known to be real"
        ),
    ]
    value: BallComplex | None = None
    if tau_1 is not None and tau_2 is not None:
        value = BallComplex(tau_1, tau_2 if sign > 0 else -tau_2)

    subject = f"({_describe(first)}) {'+' if sign > 0 else '-'} ({_describe(second)})i"
    certificate = make_certificate(Theorem.PROP1, checks, value=value, subject=subject, inputs=(first, second))
    logger.info(f"{subject}: {certificate.verdict}")
    return certificate


def builtin_certificate(name: NamedConstant, prec: int) -> Certificate:
    """The trusted base: e and pi are transcendental"""
    checks = [structural_check(f"{name} is in the built-in transcendental registry", True)]
    return make_certificate(Theorem.BUILTIN, checks, value=const(name, prec), subject=str(name))
