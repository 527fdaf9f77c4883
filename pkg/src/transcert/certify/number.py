"""Certificates for variable free expressions: e, pi, f(a), sums c_i e^{alpha_i} and products alpha_i^beta_i.
These feed the combinators, which only accept numbers that already carry a certificate."""

import logging
from fractions import Fraction

from transcert.arith.functions import FunctionName, NamedConstant
from transcert.certify.combine import builtin_certificate, certify_lw_combination
from transcert.certify.function import certify_function_value
from transcert.certify.model import Certificate
from transcert.certify.power import certify_power_product
from transcert.error import InputNotCertified
from transcert.expr import algebraic
from transcert.expr.algebraic import ONE, AlgebraicNumber, Rational
from transcert.expr.forms import COR1_FUNCTIONS
from transcert.expr.polynomial import fold_constant
from transcert.expr.tree import Add, Const, Div, Expr, Fn, Mul, Named, Pow, Sub, has_var, to_source

logger = logging.getLogger(__name__)

LWTerms = list[tuple[Fraction, AlgebraicNumber]]  # (c_i, alpha_i) of sum c_i e^{alpha_i}
PowerTerms = list[tuple[AlgebraicNumber, AlgebraicNumber]]  # (alpha_i, beta_i) of prod alpha_i^beta_i


def _rational_value(expr: Expr) -> Fraction | None:
    value = fold_constant(expr)
    return value.value if isinstance(value, Rational) else None


def _scaled(terms: LWTerms | None, factor: Fraction) -> LWTerms | None:
    return None if terms is None else [(c * factor, alpha) for c, alpha in terms]


def lw_terms(expr: Expr) -> LWTerms | None:
    """expr as sum c_i e^{alpha_i} with rational c_i (None if it isn't one). Repeated exponents are kept apart."""
    match expr:
        case Named(name=NamedConstant.E):
            return [(Fraction(1), ONE)]
        case Pow(base=Named(name=NamedConstant.E), exponent=u) | Fn(name=FunctionName.EXP, arg=u):
            alpha = fold_constant(u)
            return None if alpha is None else [(Fraction(1), alpha)]
        case Add(left=left, right=right) | Sub(left=left, right=right):
            a, b = lw_terms(left), lw_terms(right)
            if a is None or b is None:
                return None
            return a + (b if isinstance(expr, Add) else [(-c, alpha) for c, alpha in b])
        case Mul(left=left, right=right):
            factor = _rational_value(left)
            if factor is not None:
                return _scaled(lw_terms(right), factor)
            factor = _rational_value(right)
            return None if factor is None else _scaled(lw_terms(left), factor)
        case Div(left=left, right=right):
            factor = _rational_value(right)
            return None if not factor else _scaled(lw_terms(left), 1 / factor)
    return None


def power_terms(expr: Expr) -> PowerTerms | None:
    """expr as a product of alpha_i^beta_i with algebraic alpha_i and non integer beta_i"""
    match expr:
        case Mul(left=left, right=right):
            a, b = power_terms(left), power_terms(right)
            return None if a is None or b is None else a + b
        case Pow(base=base, exponent=exponent):
            alpha, beta = fold_constant(base), fold_constant(exponent)
            if alpha is None or beta is None or algebraic.as_integer(beta) is not None:
                return None
            return [(alpha, beta)]
    return None


def certify_number(expr: Expr, prec: int) -> Certificate:
    """Certificate for a variable free expression of one of the supported shapes.

    Raises InputNotCertified if expr is algebraic or matches none of the shapes (nothing else is assumed
    transcendental)."""
    text = to_source(expr)
    if has_var(expr):
        raise InputNotCertified(f"'{text}' mentions x. Pass an equation to certify one of its roots instead")

    match expr:
        case Named(name=name):
            return builtin_certificate(name, prec)
        case Fn(name=fn, arg=arg) if fn in COR1_FUNCTIONS:
            a = fold_constant(arg)
            if a is not None:
                return certify_function_value(fn, a, prec)[1]
        case Const():
            raise InputNotCertified(f"'{text}' is algebraic")

    terms = lw_terms(expr)
    if terms is not None:
        return certify_lw_combination([c for c, _ in terms], [alpha for _, alpha in terms], prec)[1]

    factors = power_terms(expr)
    if factors is not None:
        return certify_power_product([a for a, _ in factors], [b for _, b in factors], prec)[1]

    logger.info(f"'{text}' matches none of the certifiable shapes")
    raise InputNotCertified(
        f"'{text}' isn't e, pi, f(a), a sum of c*e^a terms or a product of a^b powers (with algebraic a, b)"
    )
