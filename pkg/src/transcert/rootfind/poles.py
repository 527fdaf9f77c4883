"""Pole bookkeeping for the argument principle.

The winding number of h around a rectangle is its number of zeros minus its number of poles. Away from branch cuts
the poles of h sit at zeros of its denominators: divisors, the cos / sin / cosh / sinh behind tan, sec, cot, csc,
tanh, coth and the bases of negative integer powers. While h is built from its denominators by arithmetic and
integer powers only, the poles in a rectangle are bounded by the zeros of those (pole free) denominators."""

import logging
from dataclasses import dataclass

from transcert.arith.complex import BallComplex
from transcert.arith.functions import FunctionName
from transcert.arith.region import Rect
from transcert.error import ArithmeticFailure
from transcert.expr import algebraic
from transcert.expr.evaluate import evaluate_complex
from transcert.expr.polynomial import fold_constant
from transcert.expr.tree import Add, Div, Expr, Fn, Mul, Pow, Sub, has_var, walk
from transcert.model.config import DEFAULT_BUDGET, Budget
from transcert.rootfind.winding import winding_number

logger = logging.getLogger(__name__)

_POLE_DENOMINATORS: dict[FunctionName, FunctionName] = {
    FunctionName.TAN: FunctionName.COS,
    FunctionName.SEC: FunctionName.COS,
    FunctionName.COT: FunctionName.SIN,
    FunctionName.CSC: FunctionName.SIN,
    FunctionName.TANH: FunctionName.COSH,
    FunctionName.COTH: FunctionName.SINH,
}


@dataclass(frozen=True)
class PoleTerm:
    denominator: Expr
    order: int  # A zero of denominator of multiplicity m is a pole of h of order at most order * m


def _integer_exponent(node: Pow) -> int | None:
    exponent = fold_constant(node.exponent)
    return None if exponent is None else algebraic.as_integer(exponent)


def _term(denominator: Expr, order: int) -> list[PoleTerm]:
    return [PoleTerm(denominator, order)] if has_var(denominator) and order > 0 else []


def pole_terms(expr: Expr) -> list[PoleTerm] | None:
    """Denominators bounding the poles of expr. None if expr may have singularities that its denominators don't
    bound, eg: a denominator inside exp / sin or a denominator that has poles itself."""
    match expr:
        case Add() | Sub() | Mul():
            left, right = pole_terms(expr.left), pole_terms(expr.right)
            return None if left is None or right is None else left + right
        case Div():
            left, right = pole_terms(expr.left), pole_terms(expr.right)
            if left is None or right != []:
                return None
            return left + _term(expr.right, 1)
        case Pow():
            base, exponent = pole_terms(expr.base), pole_terms(expr.exponent)
            if base is None or exponent != []:
                return None
            n = _integer_exponent(expr)
            if n is None:
                # exp, constant bases and principal branch powers are only singular on a branch cut
                return [] if base == [] else None
            if n >= 0:
                return [PoleTerm(t.denominator, t.order * n) for t in base] if n else []
            return _term(expr.base, -n) if base == [] else None
        case Fn():
            if pole_terms(expr.arg) != []:
                return None
            if expr.name in _POLE_DENOMINATORS:
                return _term(Fn(_POLE_DENOMINATORS[expr.name], expr.arg), 1)
            return []
        case _:
            return []


def denominators(expr: Expr) -> list[Expr]:
    """Every expression of x whose zeros may be singularities of expr (outside branch cuts)"""
    found: list[Expr] = []
    for node in walk(expr):
        match node:
            case Div() if has_var(node.right):
                found.append(node.right)
            case Fn() if node.name in _POLE_DENOMINATORS and has_var(node.arg):
                found.append(Fn(_POLE_DENOMINATORS[node.name], node.arg))
            case Pow() if has_var(node.base) and (_integer_exponent(node) or 0) < 0:
                found.append(node.base)
    return found


def may_vanish(expr: Expr, z: BallComplex, prec: int) -> bool:
    try:
        value = evaluate_complex(expr, z, prec)
    except ArithmeticFailure:
        return True
    return not value.is_finite() or value.contains_zero()


@dataclass(frozen=True)
class PoleStructure:
    denominators: tuple[Expr, ...]
    terms: tuple[PoleTerm, ...] | None  # None when the poles of h can't be counted from its denominators

    @staticmethod
    def of(h: Expr) -> "PoleStructure":
        terms = pole_terms(h)
        return PoleStructure(tuple(denominators(h)), None if terms is None else tuple(terms))

    def is_pole_free(self) -> bool:
        return not self.denominators


def zero_count(
    poles: PoleStructure, rect: Rect, winding: int, prec: int, budget: Budget = DEFAULT_BUDGET
) -> tuple[int, int] | None:
    """Bounds (lo, hi) on the number of zeros of h inside rect (with multiplicity) given the winding number of h
    around rect, where poles is the PoleStructure of h. None if rect may hold poles that can't be counted.

    Raises BoundaryZero if a denominator vanishes on the boundary of rect."""
    z = rect.ball(prec)
    if not any(may_vanish(d, z, prec) for d in poles.denominators):
        return winding, winding
    if poles.terms is None:
        logger.debug(f"{rect} may hold a singularity of h that can't be counted")
        return None

    pole_bound = 0
    for term in poles.terms:
        if may_vanish(term.denominator, z, prec):
            pole_bound += term.order * winding_number(term.denominator, rect, prec, budget)
    return max(winding, 0), winding + pole_bound
