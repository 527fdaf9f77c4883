"""Hypothesis suites for principal branch power products: (alpha_1 f_1(x))^beta_1 ... = g(x) equations and plain
alpha_1^beta_1 ... alpha_n^beta_n numbers"""

import logging
from fractions import Fraction

from transcert.arith.complex import BallComplex
from transcert.arith.functions import Ball, ball_pow
from transcert.arith.real import BallReal
from transcert.certify.exponential import polynomial_at
from transcert.certify.model import Check, Certificate, Theorem, make_certificate
from transcert.certify.nonzero import RootRefiner, all_nonzero_check, nonzero_check, root_value, structural_check
from transcert.expr import algebraic
from transcert.expr.algebraic import AlgebraicNumber, PolyRoot, Rational, Surd
from transcert.expr.forms import Thm4Form
from transcert.rootfind.common import PRINCIPAL_BRANCH
from transcert.rootfind.model import RootEnclosure

logger = logging.getLogger(__name__)


def _not_zero_or_one(alphas: list[AlgebraicNumber]) -> bool:
    return not any(algebraic.is_zero(a) or algebraic.is_one(a) for a in alphas)


def thm4_checks(form: Thm4Form, root: RootEnclosure, refiner: RootRefiner) -> list[Check]:
    alphas = [f.alpha for f in form.factors]
    betas = [f.beta for f in form.factors]
    return [
        structural_check("alpha_1..alpha_n are algebraic and not 0 or 1", _not_zero_or_one(alphas)),
        structural_check("beta_1..beta_n are irrational", all(algebraic.is_irrational(b) for b in betas)),
        all_nonzero_check("f_i(root) != 0 for every i", [polynomial_at(f.f) for f in form.factors], refiner),
        nonzero_check("g(root) != 0", polynomial_at(form.g), refiner),
        nonzero_check("root != 0", root_value, refiner),
        structural_check(
            "powers are taken on the principal branch",
            root.branch == PRINCIPAL_BRANCH,
            "the root wasn't located on the principal branch",
        ),
    ]


def _rank(rows: list[list[Fraction]]) -> int:
    """Rank of a rational matrix by exact Gaussian elimination"""
    matrix = [row[:] for row in rows]
    rank = 0
    columns = len(matrix[0]) if matrix else 0
    for col in range(columns):
        pivot = next((r for r in range(rank, len(matrix)) if matrix[r][col] != 0), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        for r in range(len(matrix)):
            if r != rank and matrix[r][col] != 0:
                factor = matrix[r][col] / matrix[rank][col]
                matrix[r] = [a - factor * b for a, b in zip(matrix[r], matrix[rank])]
        rank += 1
    return rank


def independent_with_one(betas: list[AlgebraicNumber]) -> bool | None:
    """True if 1, beta_1, ..., beta_n are linearly independent over Q. Decided exactly for rationals and surds
    (whose sqrt(d) parts are independent for distinct squarefree d). None when a polynomial root is involved
    alongside other exponents."""
    if len(betas) == 1:
        return algebraic.is_irrational(betas[0])
    if any(isinstance(b, PolyRoot) for b in betas):
        return None
    if any(isinstance(b, Rational) for b in betas):
        return False

    # Only the b sqrt(d) part of a surd a + b sqrt(d) matters modulo Q
    surds = [b for b in betas if isinstance(b, Surd)]
    radicands = sorted({b.d for b in surds})
    rows = []
    for beta in surds:
        rows.append([beta.b if beta.d == d else Fraction(0) for d in radicands])
    return _rank(rows) == len(betas)


def power_product_value(alphas: list[AlgebraicNumber], betas: list[AlgebraicNumber], prec: int) -> Ball:
    """alpha_1^beta_1 ... alpha_n^beta_n on the principal branch"""
    total: Ball | None = None
    for alpha, beta in zip(alphas, betas):
        base = algebraic.enclosure(alpha, prec)
        if isinstance(base, BallReal) and not base.is_positive():
            base = BallComplex.from_real(base)  # Negative bases take the principal logarithm
        term = ball_pow(base, algebraic.enclosure(beta, prec))
        total = term if total is None else total * term
    if total is None:
        raise ValueError("A power product needs at least one factor")
    return total


def certify_power_product(
    alphas: list[AlgebraicNumber], betas: list[AlgebraicNumber], prec: int
) -> tuple[Ball, Certificate]:
    """Encloses alpha_1^beta_1 ... alpha_n^beta_n and certifies it as a Gelfond-Schneider-Baker number.

    Beyond alpha_i not in {0, 1} and irrational beta_i the exponents must be linearly independent over Q together
    with 1 (otherwise eg: 2^sqrt(2) * 2^-sqrt(2) = 1 would qualify)."""
    if len(alphas) != len(betas) or not alphas:
        raise ValueError("alphas and betas must be non empty and of equal length")

    value = power_product_value(alphas, betas, prec)
    checks = [
        structural_check("alpha_1..alpha_n are algebraic and not 0 or 1", _not_zero_or_one(alphas)),
        structural_check("beta_1..beta_n are irrational", all(algebraic.is_irrational(b) for b in betas)),
        structural_check(
            "1, beta_1..beta_n are linearly independent over Q",
            independent_with_one(betas),
            "the exponents are linearly dependent over Q (or independence can't be decided)",
        ),
    ]
    subject = " * ".join(f"({algebraic.to_text(a)})^({algebraic.to_text(b)})" for a, b in zip(alphas, betas))
    certificate = make_certificate(Theorem.GSB, checks, value=value, subject=subject)
    logger.info(f"{subject}: {certificate.verdict}")
    return value, certificate
