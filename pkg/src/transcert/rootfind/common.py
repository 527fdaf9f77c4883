"""Adapters from expressions to the ball valued callables the arith solvers work on, plus branch cut detection"""

from typing import Callable

from transcert.arith.complex import BallComplex
from transcert.arith.functions import FunctionName, NamedConstant
from transcert.arith.real import BallReal
from transcert.arith.region import Rect
from transcert.error import ArithmeticFailure
from transcert.expr import algebraic
from transcert.expr.evaluate import evaluate_complex, evaluate_real
from transcert.expr.polynomial import fold_constant
from transcert.expr.tree import Expr, Fn, Named, Pow, has_var, walk

RealFunction = Callable[[BallReal, int], BallReal]
ComplexFunction = Callable[[BallComplex, int], BallComplex]

PRINCIPAL_BRANCH = "principal"


def real_function(expr: Expr) -> RealFunction:
    def fn(x: BallReal, prec: int) -> BallReal:
        return evaluate_real(expr, x, prec)

    return fn


def complex_function(expr: Expr) -> ComplexFunction:
    def fn(z: BallComplex, prec: int) -> BallComplex:
        return evaluate_complex(expr, z, prec)

    return fn


# region branch cuts


def _meets_negative_axis(w: BallComplex) -> bool:
    """w may lie on (-inf, 0]"""
    return w.im.contains_zero() and not w.re.is_positive()


def _meets_real_rays(w: BallComplex) -> bool:
    """w may lie on (-inf, -1] or [1, inf)"""
    return w.im.contains_zero() and (w.re.upper_exact() >= 1 or w.re.lower_exact() <= -1)


def _meets_imaginary_rays(w: BallComplex) -> bool:
    """w may lie on (-i inf, -i] or [i, i inf)"""
    return w.re.contains_zero() and (w.im.upper_exact() >= 1 or w.im.lower_exact() <= -1)


def _meets_unit_segment(w: BallComplex) -> bool:
    """w may lie on [-1, 1] (where 1/w lands on the asin / acos cuts)"""
    return w.im.contains_zero() and w.re.lower_exact() <= 1 and w.re.upper_exact() >= -1


_CUTS: dict[FunctionName, Callable[[BallComplex], bool]] = {
    FunctionName.LN: _meets_negative_axis,
    FunctionName.SQRT: _meets_negative_axis,
    FunctionName.ASIN: _meets_real_rays,
    FunctionName.ACOS: _meets_real_rays,
    FunctionName.ATAN: _meets_imaginary_rays,
    FunctionName.ACOT: _meets_imaginary_rays,
    FunctionName.ASEC: _meets_unit_segment,
    FunctionName.ACSC: _meets_unit_segment,
}


def _is_multivalued_power(node: Pow) -> bool:
    if node.base == Named(NamedConstant.E) or not has_var(node.base):
        return False
    exponent = fold_constant(node.exponent)
    return exponent is None or algebraic.as_integer(exponent) is None


def cut_arguments(expr: Expr) -> list[tuple[Expr, Callable[[BallComplex], bool]]]:
    """Every (argument, cut test) pair for the principal branch functions of x inside expr"""
    cuts: list[tuple[Expr, Callable[[BallComplex], bool]]] = []
    for node in walk(expr):
        if isinstance(node, Fn) and node.name in _CUTS and has_var(node.arg):
            cuts.append((node.arg, _CUTS[node.name]))
        elif isinstance(node, Pow) and _is_multivalued_power(node):
            cuts.append((node.base, _meets_negative_axis))
    return cuts


def has_branch_cut(expr: Expr) -> bool:
    return bool(cut_arguments(expr))


def branch_of(expr: Expr) -> str | None:
    return PRINCIPAL_BRANCH if has_branch_cut(expr) else None


def touches_branch_cut(expr: Expr, rect: Rect, prec: int) -> bool:
    """True if some principal branch cut of expr may meet the closed rect"""
    z = rect.ball(prec)
    for arg, meets in cut_arguments(expr):
        try:
            value = evaluate_complex(arg, z, prec)
            if not value.is_finite() or meets(value):
                return True
        except ArithmeticFailure:
            return True
    return False


# endregion
