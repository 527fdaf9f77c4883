from transcert.arith.complex import BallComplex
from transcert.arith.functions import Ball, BinaryOp, FunctionName, NamedConstant, ball_binary, ball_pow, ball_unary
from transcert.arith.functions import const as named_const
from transcert.arith.real import BallReal
from transcert.error import ArithmeticFailure
from transcert.expr.algebraic import enclosure
from transcert.expr.tree import Add, Const, Div, Expr, Fn, Mul, Named, Pow, Sub, Var

_BINARY_OPS: dict[type, BinaryOp] = {Add: BinaryOp.ADD, Sub: BinaryOp.SUB, Mul: BinaryOp.MUL, Div: BinaryOp.DIV}


def _evaluate(expr: Expr, x: Ball, prec: int, path: tuple[int, ...]) -> Ball:
    match expr:
        case Const(value=value):
            return enclosure(value, prec)
        case Named(name=name):
            return named_const(name, prec)
        case Var():
            return x
        case Fn(name=name, arg=arg):
            value = _evaluate(arg, x, prec, path + (0,))
            try:
                return ball_unary(name, value)
            except ArithmeticFailure as exc:
                raise exc.with_path(path) from exc
        case Pow(base=Named(name=NamedConstant.E), exponent=exponent):
            value = _evaluate(exponent, x, prec, path + (1,))
            try:
                return ball_unary(FunctionName.EXP, value)
            except ArithmeticFailure as exc:
                raise exc.with_path(path) from exc
        case Pow(base=base, exponent=exponent):
            base_value = _evaluate(base, x, prec, path + (0,))
            exponent_value = _evaluate(exponent, x, prec, path + (1,))
            try:
                return ball_pow(base_value, exponent_value)
            except ArithmeticFailure as exc:
                raise exc.with_path(path) from exc
        case Add() | Sub() | Mul() | Div():
            left = _evaluate(expr.left, x, prec, path + (0,))
            right = _evaluate(expr.right, x, prec, path + (1,))
            try:
                return ball_binary(_BINARY_OPS[type(expr)], left, right)
            except ArithmeticFailure as exc:
                raise exc.with_path(path) from exc
    raise ValueError(f"Unsupported expression node {expr!r}")


def evaluate(expr: Expr, x: BallReal | BallComplex, prec: int) -> Ball:
    """Encloses expr(x) at prec bits. A complex x (or a complex coefficient) gives a complex result.
    ArithmeticFailures are annotated with the path (child indices from the root) of the failing subtree."""
    return _evaluate(expr, x, prec, ())


def evaluate_complex(expr: Expr, z: BallComplex, prec: int) -> BallComplex:
    """As evaluate but always returns a complex ball"""
    value = _evaluate(expr, z, prec, ())
    return value if isinstance(value, BallComplex) else BallComplex.from_real(value)


def evaluate_real(expr: Expr, x: BallReal, prec: int) -> BallReal:
    """As evaluate but requires a real result"""
    value = _evaluate(expr, x, prec, ())
    if isinstance(value, BallComplex):
        if not value.is_real():
            raise ArithmeticFailure(f"Expression has a non-real value {value}")
        return value.re
    return value
