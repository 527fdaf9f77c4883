from dataclasses import dataclass
from fractions import Fraction

from transcert.arith.functions import Ball, FunctionName
from transcert.arith.real import BallReal
from transcert.expr import algebraic
from transcert.expr.algebraic import ONE, ZERO, AlgebraicNumber, Rational
from transcert.expr.tree import Add, Const, Div, Expr, Fn, Mul, Named, Pow, Sub, Var, X, const, to_source

MAX_EXPANDED_POWER = 64


def _normalise(coefficients: tuple[AlgebraicNumber, ...]) -> tuple[AlgebraicNumber, ...]:
    trimmed = list(coefficients)
    while trimmed and algebraic.is_zero(trimmed[-1]):
        trimmed.pop()
    return tuple(trimmed)


@dataclass(frozen=True)
class Polynomial:
    """A polynomial in x with exact algebraic coefficients (ascending powers, no trailing zeros)"""

    coefficients: tuple[AlgebraicNumber, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", _normalise(tuple(self.coefficients)))

    @staticmethod
    def constant(value: AlgebraicNumber | int | Fraction) -> "Polynomial":
        if isinstance(value, (int, Fraction)):
            value = algebraic.rational(value)
        return Polynomial((value,))

    @staticmethod
    def x() -> "Polynomial":
        return Polynomial((ZERO, ONE))

    @staticmethod
    def of(*coefficients: int | Fraction) -> "Polynomial":
        """Rational polynomial from ascending coefficients"""
        return Polynomial(tuple(algebraic.rational(c) for c in coefficients))

    # region queries

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial"""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_constant(self) -> bool:
        return self.degree <= 0

    def coefficient(self, k: int) -> AlgebraicNumber:
        return self.coefficients[k] if k < len(self.coefficients) else ZERO

    @property
    def leading(self) -> AlgebraicNumber:
        return self.coefficients[-1] if self.coefficients else ZERO

    def is_rational(self) -> bool:
        """True when every coefficient lies in Q"""
        return all(isinstance(c, Rational) for c in self.coefficients)

    def is_monic(self) -> bool:
        return algebraic.is_one(self.leading)

    def is_x(self) -> bool:
        return self == Polynomial.x()

    def constant_value(self) -> AlgebraicNumber:
        """The value of a constant polynomial"""
        if not self.is_constant():
            raise ValueError(f"{self} isn't constant")
        return self.coefficient(0)

    # endregion

    # region arithmetic

    def __add__(self, other: "Polynomial") -> "Polynomial":
        size = max(len(self.coefficients), len(other.coefficients))
        return Polynomial(tuple(algebraic.add(self.coefficient(k), other.coefficient(k)) for k in range(size)))

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(algebraic.negate(c) for c in self.coefficients))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero() or other.is_zero():
            return Polynomial(())
        result = [ZERO] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                if algebraic.is_zero(a) or algebraic.is_zero(b):
                    continue
                result[i + j] = algebraic.add(result[i + j], algebraic.mul(a, b))
        return Polynomial(tuple(result))

    def scale(self, factor: AlgebraicNumber) -> "Polynomial":
        return Polynomial(tuple(algebraic.mul(c, factor) for c in self.coefficients))

    def power(self, n: int) -> "Polynomial":
        result = Polynomial.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def monic_split(self) -> tuple[AlgebraicNumber, "Polynomial"]:
        """(leading coefficient, monic polynomial) such that self = lead * monic"""
        lead = self.leading
        return lead, self.scale(algebraic.inverse(lead))

    def derivative(self) -> "Polynomial":
        return Polynomial(
            tuple(algebraic.mul(algebraic.rational(k), c) for k, c in enumerate(self.coefficients))[1:]
        )

    # endregion

    def evaluate(self, x: Ball, prec: int) -> Ball:
        """Horner evaluation over a ball"""
        if self.is_zero():
            return BallReal.zero(prec)
        result: Ball = algebraic.enclosure(self.coefficients[-1], prec)
        for c in reversed(self.coefficients[:-1]):
            result = result * x + algebraic.enclosure(c, prec)
        return result

    def to_expr(self) -> Expr:
        """Canonical expression: terms in descending powers"""
        if self.is_zero():
            return const(0)
        terms: list[Expr] = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if algebraic.is_zero(c):
                continue
            monomial: Expr | None = None if k == 0 else (X if k == 1 else Pow(X, const(k)))
            if monomial is None:
                terms.append(Const(c))
            elif algebraic.is_one(c):
                terms.append(monomial)
            else:
                terms.append(Mul(Const(c), monomial))
        expr = terms[0]
        for term in terms[1:]:
            expr = Add(expr, term)
        return expr

    def __str__(self) -> str:
        return to_source(self.to_expr())


def from_expr(expr: Expr) -> Polynomial | None:
    """The polynomial expr represents or None if it isn't one. May raise NotRepresentable when coefficient
    arithmetic leaves the supported algebraic representations."""
    match expr:
        case Const(value=value):
            return Polynomial.constant(value)
        case Var():
            return Polynomial.x()
        case Named():
            return None
        case Add(left=left, right=right) | Sub(left=left, right=right) | Mul(left=left, right=right):
            a, b = from_expr(left), from_expr(right)
            if a is None or b is None:
                return None
            if isinstance(expr, Add):
                return a + b
            if isinstance(expr, Sub):
                return a - b
            return a * b
        case Div(left=left, right=right):
            a, b = from_expr(left), from_expr(right)
            if a is None or b is None or not b.is_constant() or b.is_zero():
                return None
            return a.scale(algebraic.inverse(b.constant_value()))
        case Pow(base=base, exponent=exponent):
            n = fold_constant(exponent)
            b = from_expr(base)
            if b is None or n is None:
                return None
            k = algebraic.as_integer(n)
            if k is None:
                return None
            if 0 <= k <= MAX_EXPANDED_POWER:
                return b.power(k)
            if b.is_constant() and not b.is_zero():
                return Polynomial.constant(algebraic.power(b.constant_value(), k))
            return None
        case Fn(name=FunctionName.SQRT, arg=arg):
            inner = from_expr(arg)
            if inner is None or not inner.is_constant():
                return None
            value = inner.constant_value()
            if not isinstance(value, Rational) or value.value < 0:
                return None
            return Polynomial.constant(algebraic.sqrt_rational(value.value))
    return None


def fold_constant(expr: Expr) -> AlgebraicNumber | None:
    """The exact algebraic value of a variable free expression (None if it isn't algebraic in a supported
    representation, eg: it mentions pi or a transcendental function)"""
    poly = from_expr(expr)
    if poly is None or not poly.is_constant():
        return None
    return poly.constant_value() if not poly.is_zero() else ZERO
