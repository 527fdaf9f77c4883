"""Symbolic d/dx with light simplification (0 and 1 identities plus constant folding)"""

from fractions import Fraction

from transcert.arith.functions import FunctionName, NamedConstant
from transcert.error import NotRepresentable
from transcert.expr import algebraic
from transcert.expr.tree import Add, Const, Div, Expr, Fn, Mul, Named, Pow, Sub, Var, const, has_var

ZERO = const(0)
ONE = const(1)


# region simplifying constructors


def _is_const(expr: Expr, value: int) -> bool:
    return isinstance(expr, Const) and isinstance(expr.value, algebraic.Rational) and expr.value.value == value


def _fold(op, a: Expr, b: Expr) -> Expr | None:
    if isinstance(a, Const) and isinstance(b, Const):
        try:
            return Const(op(a.value, b.value))
        except (NotRepresentable, ZeroDivisionError):
            return None
    return None


def s_add(a: Expr, b: Expr) -> Expr:
    if _is_const(a, 0):
        return b
    if _is_const(b, 0):
        return a
    return _fold(algebraic.add, a, b) or Add(a, b)


def s_neg(a: Expr) -> Expr:
    if isinstance(a, Const):
        return Const(algebraic.negate(a.value))
    return s_mul(const(-1), a)


def s_sub(a: Expr, b: Expr) -> Expr:
    if _is_const(b, 0):
        return a
    if _is_const(a, 0):
        return s_neg(b)
    return _fold(algebraic.sub, a, b) or Sub(a, b)


def s_mul(a: Expr, b: Expr) -> Expr:
    if _is_const(a, 0) or _is_const(b, 0):
        return ZERO
    if _is_const(a, 1):
        return b
    if _is_const(b, 1):
        return a
    folded = _fold(algebraic.mul, a, b)
    if folded is not None:
        return folded
    if isinstance(a, Const) and isinstance(b, Mul) and isinstance(b.left, Const):
        merged = _fold(algebraic.mul, a, b.left)
        if merged is not None:
            return s_mul(merged, b.right)
    return Mul(a, b)


def s_div(a: Expr, b: Expr) -> Expr:
    if _is_const(b, 1):
        return a
    if _is_const(a, 0):
        return ZERO
    return _fold(algebraic.div, a, b) or Div(a, b)


def s_pow(base: Expr, exponent: Expr) -> Expr:
    if _is_const(exponent, 0):
        return ONE
    if _is_const(exponent, 1):
        return base
    return Pow(base, exponent)


# endregion


def _fn(name: FunctionName, arg: Expr) -> Fn:
    return Fn(name, arg)


def _one_minus_square(u: Expr) -> Expr:
    return s_sub(ONE, s_pow(u, const(2)))


def _outer_derivative(name: FunctionName, u: Expr) -> Expr:
    """f'(u) for f = name"""
    match name:
        case FunctionName.EXP:
            return _fn(FunctionName.EXP, u)
        case FunctionName.LN:
            return s_div(ONE, u)
        case FunctionName.SQRT:
            return s_div(ONE, s_mul(const(2), _fn(FunctionName.SQRT, u)))
        case FunctionName.SIN:
            return _fn(FunctionName.COS, u)
        case FunctionName.COS:
            return s_neg(_fn(FunctionName.SIN, u))
        case FunctionName.TAN:
            return s_pow(_fn(FunctionName.SEC, u), const(2))
        case FunctionName.COT:
            return s_neg(s_pow(_fn(FunctionName.CSC, u), const(2)))
        case FunctionName.SEC:
            return s_mul(_fn(FunctionName.SEC, u), _fn(FunctionName.TAN, u))
        case FunctionName.CSC:
            return s_neg(s_mul(_fn(FunctionName.CSC, u), _fn(FunctionName.COT, u)))
        case FunctionName.SINH:
            return _fn(FunctionName.COSH, u)
        case FunctionName.COSH:
            return _fn(FunctionName.SINH, u)
        case FunctionName.TANH:
            return _one_minus_square(_fn(FunctionName.TANH, u))
        case FunctionName.COTH:
            return _one_minus_square(_fn(FunctionName.COTH, u))
        case FunctionName.ASIN:
            return s_div(ONE, _fn(FunctionName.SQRT, _one_minus_square(u)))
        case FunctionName.ACOS:
            return s_neg(s_div(ONE, _fn(FunctionName.SQRT, _one_minus_square(u))))
        case FunctionName.ATAN:
            return s_div(ONE, s_add(ONE, s_pow(u, const(2))))
        case FunctionName.ACOT:
            return s_neg(s_div(ONE, s_add(ONE, s_pow(u, const(2)))))
        case FunctionName.ASEC | FunctionName.ACSC:
            # 1 / (u^2 sqrt(1 - 1/u^2)) on the principal branch
            u_squared = s_pow(u, const(2))
            root = _fn(FunctionName.SQRT, s_sub(ONE, s_div(ONE, u_squared)))
            magnitude = s_div(ONE, s_mul(u_squared, root))
            return magnitude if name == FunctionName.ASEC else s_neg(magnitude)
    raise ValueError(f"No derivative rule for {name}")


def _exponent_minus_one(exponent: Expr) -> Expr:
    if isinstance(exponent, Const) and isinstance(exponent.value, algebraic.Rational):
        return Const(algebraic.Rational(exponent.value.value - Fraction(1)))
    return s_sub(exponent, ONE)


def differentiate(expr: Expr) -> Expr:
    """d expr / dx"""
    match expr:
        case Const() | Named():
            return ZERO
        case Var():
            return ONE
        case Add(left=u, right=v):
            return s_add(differentiate(u), differentiate(v))
        case Sub(left=u, right=v):
            return s_sub(differentiate(u), differentiate(v))
        case Mul(left=u, right=v):
            return s_add(s_mul(differentiate(u), v), s_mul(u, differentiate(v)))
        case Div(left=u, right=v):
            numerator = s_sub(s_mul(differentiate(u), v), s_mul(u, differentiate(v)))
            return s_div(numerator, s_pow(v, const(2)))
        case Fn(name=name, arg=u):
            return s_mul(differentiate(u), _outer_derivative(name, u))
        case Pow(base=Named(name=NamedConstant.E), exponent=u):
            return s_mul(differentiate(u), expr)
        case Pow(base=u, exponent=n) if not has_var(n):
            return s_mul(s_mul(n, differentiate(u)), s_pow(u, _exponent_minus_one(n)))
        case Pow(base=a, exponent=u) if not has_var(a):
            return s_mul(s_mul(differentiate(u), _fn(FunctionName.LN, a)), expr)
        case Pow(base=u, exponent=v):
            # d(u^v) = u^v (v' ln u + v u' / u)
            inner = s_add(s_mul(differentiate(v), _fn(FunctionName.LN, u)), s_div(s_mul(v, differentiate(u)), u))
            return s_mul(expr, inner)
    raise ValueError(f"Unsupported expression node {expr!r}")
