"""Normalised equation forms. Every classified form can rebuild an equation (to_equation) which classifies back
to the same form."""

from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from typing import Any, ClassVar, Union

from transcert.arith.functions import FunctionName
from transcert.expr import algebraic
from transcert.expr.algebraic import AlgebraicNumber
from transcert.expr.polynomial import Polynomial
from transcert.expr.tree import E, X, Add, Const, Equation, Expr, Fn, Mul, Pow, const, to_json

# Transcendental function families admitted by each form
COR1_FUNCTIONS = frozenset(
    {
        FunctionName.LN,
        FunctionName.SIN,
        FunctionName.COS,
        FunctionName.TAN,
        FunctionName.CSC,
        FunctionName.SEC,
        FunctionName.COT,
        FunctionName.SINH,
        FunctionName.COSH,
        FunctionName.TANH,
        FunctionName.COTH,
    }
)
COR2_FUNCTIONS = COR1_FUNCTIONS
COR3_FUNCTIONS = frozenset(
    {
        FunctionName.ASIN,
        FunctionName.ACOS,
        FunctionName.ATAN,
        FunctionName.ACOT,
        FunctionName.ASEC,
        FunctionName.ACSC,
    }
)
COR4_FUNCTIONS = (COR1_FUNCTIONS - {FunctionName.LN}) | {FunctionName.EXP}
# e^{x^j} shapes of the polynomial-in-f family are exponential polynomials and classify as Thm2
COR5_FUNCTIONS = COR1_FUNCTIONS - {FunctionName.LN}


class FormKind(StrEnum):
    THM2 = "Thm2"
    THM4 = "Thm4"
    COR1 = "Cor1"
    COR2 = "Cor2"
    COR3 = "Cor3"
    COR4 = "Cor4"
    COR5 = "Cor5"
    LW = "LW"
    UNCLASSIFIED = "Unclassified"


class UnclassifiedReason(StrEnum):
    NON_ALGEBRAIC_CONSTANT = "NonAlgebraicConstant"
    ALGEBRAIC_EQUATION = "AlgebraicEquation"
    VARIABLE_EXPONENT = "VariableExponent"
    MIXED_FUNCTIONS = "MixedFunctions"
    UNSUPPORTED_SHAPE = "UnsupportedShape"
    NON_REPRESENTABLE_COEFFICIENT = "NonRepresentableCoefficient"


def _poly_json(poly: Polynomial) -> list[Any]:
    return [algebraic.to_json(c) for c in poly.coefficients]


def _function_expr(fn: FunctionName, j: int = 1) -> Expr:
    """f(x) with e^{x^j} standing in for the exponential"""
    if fn == FunctionName.EXP:
        return Pow(E, X if j == 1 else Pow(X, const(j)))
    return Fn(fn, X)


def _times(coefficient: Polynomial, expr: Expr) -> Expr:
    if coefficient == Polynomial.constant(1):
        return expr
    return Mul(coefficient.to_expr(), expr)


def _sum(terms: list[Expr]) -> Expr:
    if not terms:
        return const(0)
    total = terms[0]
    for term in terms[1:]:
        total = Add(total, term)
    return total


def _exp_of(alpha: AlgebraicNumber, f: Polynomial) -> Expr:
    if algebraic.is_one(alpha):
        return Pow(E, f.to_expr())
    return Pow(E, Mul(Const(alpha), f.to_expr()))


@dataclass(frozen=True)
class ExpTerm:
    """g(x) * e^{alpha * f(x)}"""

    g: Polynomial
    alpha: AlgebraicNumber
    f: Polynomial  # monic


@dataclass(frozen=True)
class Thm2Form:
    """g_1(x) e^{alpha_1 f_1(x)} + ... + g_m(x) e^{alpha_m f_m(x)} = f(x)"""

    kind: ClassVar[FormKind] = FormKind.THM2
    terms: tuple[ExpTerm, ...]
    f: Polynomial

    @property
    def m(self) -> int:
        return len(self.terms)

    def to_equation(self) -> Equation:
        lhs = _sum([_times(t.g, _exp_of(t.alpha, t.f)) for t in self.terms])
        return Equation(lhs, self.f.to_expr())

    def to_json(self) -> dict[str, Any]:
        return {
            "kind": str(self.kind),
            "m": self.m,
            "terms": [
                {"g": _poly_json(t.g), "alpha": algebraic.to_json(t.alpha), "f": _poly_json(t.f)} for t in self.terms
            ],
            "f": _poly_json(self.f),
        }


@dataclass(frozen=True)
class PowerFactor:
    """(alpha * f(x))^beta"""

    alpha: AlgebraicNumber
    f: Polynomial  # monic
    beta: AlgebraicNumber


@dataclass(frozen=True)
class Thm4Form:
    """(alpha_1 f_1(x))^{beta_1} ... (alpha_n f_n(x))^{beta_n} = g(x) on the principal branch"""

    kind: ClassVar[FormKind] = FormKind.THM4
    factors: tuple[PowerFactor, ...]
    g: Polynomial

    @property
    def n(self) -> int:
        return len(self.factors)

    def bases(self) -> list[Polynomial]:
        """alpha_i f_i(x) for each factor"""
        return [factor.f.scale(factor.alpha) for factor in self.factors]

    def to_equation(self) -> Equation:
        powers: list[Expr] = [
            Pow(base.to_expr(), Const(factor.beta)) for base, factor in zip(self.bases(), self.factors)
        ]
        lhs = powers[0]
        for power in powers[1:]:
            lhs = Mul(lhs, power)
        return Equation(lhs, self.g.to_expr())

    def to_json(self) -> dict[str, Any]:
        return {
            "kind": str(self.kind),
            "n": self.n,
            "factors": [
                {"alpha": algebraic.to_json(f.alpha), "f": _poly_json(f.f), "beta": algebraic.to_json(f.beta)}
                for f in self.factors
            ],
            "g": _poly_json(self.g),
            "branch": "principal",
        }


@dataclass(frozen=True)
class FunctionPolyForm:
    """g(f(x)) = h(x) for a transcendental f with g in Q-bar[y] without constant term. Cor5 when
    1 <= deg(g) <= 4 (and f isn't ln), Cor1 otherwise."""

    kind: FormKind
    fn: FunctionName
    g: Polynomial  # polynomial in y = f(x)
    h: Polynomial

    def to_equation(self) -> Equation:
        atom = Fn(self.fn, X)
        terms: list[Expr] = []
        for k in range(self.g.degree, 0, -1):
            c = self.g.coefficient(k)
            if algebraic.is_zero(c):
                continue
            power = atom if k == 1 else Pow(atom, const(k))
            terms.append(power if algebraic.is_one(c) else Mul(Const(c), power))
        return Equation(_sum(terms), self.h.to_expr())

    def to_json(self) -> dict[str, Any]:
        return {"kind": str(self.kind), "fn": str(self.fn), "g": _poly_json(self.g), "h": _poly_json(self.h)}


@dataclass(frozen=True)
class Cor2Form:
    """h1(x) f(g(x)) = h2(x)"""

    kind: ClassVar[FormKind] = FormKind.COR2
    fn: FunctionName
    h1: Polynomial
    g: Polynomial
    h2: Polynomial

    def to_equation(self) -> Equation:
        return Equation(_times(self.h1, Fn(self.fn, self.g.to_expr())), self.h2.to_expr())

    def to_json(self) -> dict[str, Any]:
        return {
            "kind": str(self.kind),
            "fn": str(self.fn),
            "h1": _poly_json(self.h1),
            "g": _poly_json(self.g),
            "h2": _poly_json(self.h2),
        }


@dataclass(frozen=True)
class Cor3Form:
    """arcfn(x) = f(x)"""

    kind: ClassVar[FormKind] = FormKind.COR3
    arcfn: FunctionName
    f: Polynomial

    def to_equation(self) -> Equation:
        return Equation(Fn(self.arcfn, X), self.f.to_expr())

    def to_json(self) -> dict[str, Any]:
        return {"kind": str(self.kind), "arcfn": str(self.arcfn), "f": _poly_json(self.f)}


@dataclass(frozen=True)
class Cor4Form:
    """(f(x) + a1)^k = g(x)"""

    kind: ClassVar[FormKind] = FormKind.COR4
    fn: FunctionName
    a1: AlgebraicNumber
    k: int
    g: Polynomial
    j: int = 1

    def to_equation(self) -> Equation:
        atom = _function_expr(self.fn, self.j)
        inner = atom if algebraic.is_zero(self.a1) else Add(atom, Const(self.a1))
        return Equation(Pow(inner, const(self.k)), self.g.to_expr())

    def to_json(self) -> dict[str, Any]:
        return {
            "kind": str(self.kind),
            "fn": str(self.fn),
            "j": self.j,
            "a1": algebraic.to_json(self.a1),
            "k": self.k,
            "g": _poly_json(self.g),
        }


@dataclass(frozen=True)
class LWForm:
    """c_1 e^{alpha_1 x} + ... + c_n e^{alpha_n x} = c_1 e^{alpha_1} + ... + c_n e^{alpha_n} (solved by x = 1)"""

    kind: ClassVar[FormKind] = FormKind.LW
    coefficients: tuple[Fraction, ...]
    alphas: tuple[AlgebraicNumber, ...]

    def to_equation(self) -> Equation:
        lhs_terms: list[Expr] = []
        rhs_terms: list[Expr] = []
        for c, alpha in zip(self.coefficients, self.alphas):
            c_poly = Polynomial.constant(c)
            lhs_terms.append(_times(c_poly, _exp_of(alpha, Polynomial.x())))
            rhs_terms.append(_times(c_poly, _exp_of(alpha, Polynomial.constant(1))))
        return Equation(_sum(lhs_terms), _sum(rhs_terms))

    def to_json(self) -> dict[str, Any]:
        return {
            "kind": str(self.kind),
            "coefficients": [algebraic.to_json(algebraic.rational(c)) for c in self.coefficients],
            "alphas": [algebraic.to_json(a) for a in self.alphas],
        }


@dataclass(frozen=True)
class Unclassified:
    kind: ClassVar[FormKind] = FormKind.UNCLASSIFIED
    reason: UnclassifiedReason
    detail: str

    def to_json(self) -> dict[str, Any]:
        return {"kind": str(self.kind), "reason": str(self.reason), "detail": self.detail}


EquationForm = Union[Thm2Form, Thm4Form, FunctionPolyForm, Cor2Form, Cor3Form, Cor4Form, LWForm, Unclassified]


def equation_json(equation: Equation, text: str | None = None) -> dict[str, Any]:
    return {
        "text": text if text is not None else str(equation),
        "ast": {"lhs": to_json(equation.lhs), "rhs": to_json(equation.rhs)},
    }
