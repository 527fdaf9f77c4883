from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterator, Union

from transcert.arith.functions import FunctionName, NamedConstant
from transcert.expr.algebraic import AlgebraicNumber, Rational, to_json as algebraic_to_json, to_text


@dataclass(frozen=True)
class Const:
    value: AlgebraicNumber


@dataclass(frozen=True)
class Named:
    name: NamedConstant


@dataclass(frozen=True)
class Var:
    """The single unknown x"""

    pass


@dataclass(frozen=True)
class _Binary:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Add(_Binary):
    pass


@dataclass(frozen=True)
class Sub(_Binary):
    pass


@dataclass(frozen=True)
class Mul(_Binary):
    pass


@dataclass(frozen=True)
class Div(_Binary):
    pass


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: "Expr"


@dataclass(frozen=True)
class Fn:
    name: FunctionName
    arg: "Expr"


Expr = Union[Const, Named, Var, Add, Sub, Mul, Div, Pow, Fn]

X = Var()
E = Named(NamedConstant.E)
PI = Named(NamedConstant.PI)


@dataclass(frozen=True)
class Equation:
    lhs: Expr
    rhs: Expr

    def residual(self) -> Expr:
        """h(x) = lhs - rhs"""
        return Sub(self.lhs, self.rhs)

    def __str__(self) -> str:
        return f"{to_source(self.lhs)} = {to_source(self.rhs)}"


def const(value: int | Fraction) -> Const:
    return Const(Rational(Fraction(value)))


def children(expr: Expr) -> tuple[Expr, ...]:
    if isinstance(expr, _Binary):
        return (expr.left, expr.right)
    if isinstance(expr, Pow):
        return (expr.base, expr.exponent)
    if isinstance(expr, Fn):
        return (expr.arg,)
    return ()


def walk(expr: Expr) -> Iterator[Expr]:
    """Pre-order traversal"""
    yield expr
    for child in children(expr):
        yield from walk(child)


def has_var(expr: Expr) -> bool:
    return any(isinstance(node, Var) for node in walk(expr))


def node_name(expr: Expr) -> str:
    return type(expr).__name__


# region printing

_PREC_ADD = 1
_PREC_MUL = 2
_PREC_POW = 3
_PREC_ATOM = 4


def _precedence(expr: Expr) -> int:
    if isinstance(expr, (Add, Sub)):
        return _PREC_ADD
    if isinstance(expr, (Mul, Div)):
        return _PREC_MUL
    if isinstance(expr, Pow):
        return _PREC_POW
    if isinstance(expr, Const) and _const_is_negative(expr):
        return _PREC_ADD  # Prints with a leading minus
    return _PREC_ATOM


def _const_is_negative(expr: Const) -> bool:
    return isinstance(expr.value, Rational) and expr.value.value < 0


def _decimal_text(value: Fraction) -> str | None:
    """Exact decimal rendering of a terminating fraction (None otherwise)"""
    den = value.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return None
    places = max(twos, fives)
    scaled = abs(value) * 10**places
    digits = str(scaled.numerator).rjust(places + 1, "0")
    text = digits if places == 0 else f"{digits[:-places]}.{digits[-places:]}"
    return f"-{text}" if value < 0 else text


def _const_text(expr: Const) -> str:
    if isinstance(expr.value, Rational):
        decimal = _decimal_text(expr.value.value)
        if decimal is not None:
            return decimal
        return f"({expr.value.value.numerator}/{expr.value.value.denominator})"
    return f"({to_text(expr.value)})"


_OPERATORS: dict[type, str] = {Add: "+", Sub: "-", Mul: "*", Div: "/"}


def _wrap(expr: Expr, needs_parens: bool) -> str:
    text = to_source(expr)
    return f"({text})" if needs_parens else text


def to_source(expr: Expr) -> str:
    """Renders expr back into the equation grammar. Parsing the result reproduces expr for any expression the
    parser can produce."""
    match expr:
        case Const():
            return _const_text(expr)
        case Named(name=name):
            return str(name)
        case Var():
            return "x"
        case Fn(name=name, arg=arg):
            return f"{name}({to_source(arg)})"
        case Pow(base=base, exponent=exponent):
            base_text = _wrap(base, _precedence(base) <= _PREC_POW)
            exponent_text = _wrap(exponent, _precedence(exponent) < _PREC_POW)
            return f"{base_text}^{exponent_text}"
        case _Binary(left=left, right=right):
            own = _precedence(expr)
            left_text = _wrap(left, _precedence(left) < own)
            right_text = _wrap(right, _precedence(right) <= own)
            return f"{left_text} {_OPERATORS[type(expr)]} {right_text}"
    raise ValueError(f"Unsupported expression node {expr!r}")


# endregion


def to_json(expr: Expr) -> dict[str, Any]:
    """Lossless JSON tree (see docs/schemas.md)"""
    match expr:
        case Const(value=value):
            return {"node": "Const", "value": algebraic_to_json(value)}
        case Named(name=name):
            return {"node": "Named", "name": str(name)}
        case Var():
            return {"node": "Var"}
        case Fn(name=name, arg=arg):
            return {"node": "Fn", "name": str(name), "children": [to_json(arg)]}
    return {"node": node_name(expr), "children": [to_json(child) for child in children(expr)]}
