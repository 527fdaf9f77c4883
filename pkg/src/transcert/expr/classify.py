"""Recognises the equation families that a transcendence certificate can be issued for.

Forms are tried most specific first: LW, Cor4, Thm4, Thm2, Cor3, Cor2, Cor5, Cor1. Anything else is Unclassified
with a reason."""

import logging
from dataclasses import dataclass

from transcert.arith.functions import FunctionName, NamedConstant
from transcert.error import NotRepresentable
from transcert.expr import algebraic
from transcert.expr.algebraic import Rational
from transcert.expr.forms import (
    COR1_FUNCTIONS,
    COR2_FUNCTIONS,
    COR3_FUNCTIONS,
    COR4_FUNCTIONS,
    COR5_FUNCTIONS,
    Cor2Form,
    Cor3Form,
    Cor4Form,
    EquationForm,
    ExpTerm,
    FormKind,
    FunctionPolyForm,
    LWForm,
    PowerFactor,
    Thm2Form,
    Thm4Form,
    Unclassified,
    UnclassifiedReason,
)
from transcert.expr.polynomial import MAX_EXPANDED_POWER, Polynomial, fold_constant, from_expr
from transcert.expr.tree import Add, Div, Equation, Expr, Fn, Mul, Named, Pow, Sub, children, has_var, to_source, walk

logger = logging.getLogger(__name__)

ZERO_POLY = Polynomial(())
ONE_POLY = Polynomial.constant(1)

ExpPoly = dict[Polynomial, Polynomial]  # exponent -> coefficient, sum of coefficient * e^exponent
FnPoly = dict[int, Polynomial]  # power of the function atom -> coefficient


@dataclass(frozen=True)
class _Atom:
    """fn(arg) where arg is a polynomial in x"""

    fn: FunctionName
    arg: Polynomial


def _exp_argument(expr: Expr) -> Expr | None:
    match expr:
        case Pow(base=Named(name=NamedConstant.E), exponent=u):
            return u
        case Fn(name=FunctionName.EXP, arg=u):
            return u
    return None


def _integer_exponent(exponent: Expr) -> int | None:
    value = fold_constant(exponent)
    return None if value is None else algebraic.as_integer(value)


# region exponential polynomials


def _exp_add(a: ExpPoly, b: ExpPoly, negate: bool = False) -> ExpPoly:
    result = dict(a)
    for exponent, coefficient in b.items():
        total = result.get(exponent, ZERO_POLY) + (-coefficient if negate else coefficient)
        if total.is_zero():
            result.pop(exponent, None)
        else:
            result[exponent] = total
    return result


def _exp_mul(a: ExpPoly, b: ExpPoly) -> ExpPoly:
    result: ExpPoly = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            result = _exp_add(result, {ea + eb: ca * cb})
    return result


def _exp_poly(expr: Expr) -> ExpPoly | None:
    """expr as a finite sum of g(x) e^{E(x)} with polynomial g and E (None if it isn't one). A bare e is e^1."""
    u = _exp_argument(expr)
    if u is not None:
        exponent = from_expr(u)
        return None if exponent is None else {exponent: ONE_POLY}

    match expr:
        case Named(name=NamedConstant.E):
            return {ONE_POLY: ONE_POLY}
        case Add(left=left, right=right) | Sub(left=left, right=right) | Mul(left=left, right=right):
            a, b = _exp_poly(left), _exp_poly(right)
            if a is None or b is None:
                return None
            if isinstance(expr, Mul):
                return _exp_mul(a, b)
            return _exp_add(a, b, negate=isinstance(expr, Sub))
        case Div(left=left, right=right):
            a, b = _exp_poly(left), _exp_poly(right)
            if a is None or b is None or len(b) != 1:
                return None
            ((exponent, coefficient),) = b.items()
            if not coefficient.is_constant():
                return None
            scale = algebraic.inverse(coefficient.constant_value())
            return {e - exponent: c.scale(scale) for e, c in a.items()}
        case Pow(base=base, exponent=n_expr):
            k = _integer_exponent(n_expr)
            b = _exp_poly(base)
            if k is None or b is None:
                return None
            if 0 <= k <= MAX_EXPANDED_POWER:
                result: ExpPoly = {ZERO_POLY: ONE_POLY}
                for _ in range(k):
                    result = _exp_mul(result, b)
                return result
            if len(b) == 1:
                ((exponent, coefficient),) = b.items()
                if coefficient.is_constant() and not coefficient.is_zero():
                    value = algebraic.power(coefficient.constant_value(), k)
                    return {exponent.scale(algebraic.rational(k)): Polynomial.constant(value)}
            return None

    poly = from_expr(expr)
    if poly is None:
        return None
    return {} if poly.is_zero() else {ZERO_POLY: poly}


# endregion

# region single function polynomials


def _as_atom(expr: Expr) -> _Atom | None:
    u = _exp_argument(expr)
    if u is not None:
        arg = from_expr(u)
        return None if arg is None else _Atom(FunctionName.EXP, arg)
    if isinstance(expr, Fn) and expr.name != FunctionName.SQRT:
        arg = from_expr(expr.arg)
        return None if arg is None else _Atom(expr.name, arg)
    return None


def _collect_atoms(expr: Expr, atoms: set[_Atom]) -> bool:
    """Adds every function term of expr to atoms. False when some function argument isn't a polynomial"""
    u = _exp_argument(expr)
    if (u is not None and has_var(u)) or (isinstance(expr, Fn) and expr.name != FunctionName.SQRT):
        atom = _as_atom(expr)
        if atom is None:
            return False
        atoms.add(atom)
        return True
    return all(_collect_atoms(child, atoms) for child in children(expr))


def _fn_add(a: FnPoly, b: FnPoly, negate: bool = False) -> FnPoly:
    result = dict(a)
    for k, coefficient in b.items():
        total = result.get(k, ZERO_POLY) + (-coefficient if negate else coefficient)
        if total.is_zero():
            result.pop(k, None)
        else:
            result[k] = total
    return result


def _fn_mul(a: FnPoly, b: FnPoly) -> FnPoly:
    result: FnPoly = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            result = _fn_add(result, {ka + kb: ca * cb})
    return result


def _fn_poly(expr: Expr, atom: _Atom) -> FnPoly | None:
    """expr as sum of P_k(x) atom^k (None if it isn't one)"""
    if _as_atom(expr) == atom:
        return {1: ONE_POLY}
    match expr:
        case Add(left=left, right=right) | Sub(left=left, right=right) | Mul(left=left, right=right):
            a, b = _fn_poly(left, atom), _fn_poly(right, atom)
            if a is None or b is None:
                return None
            if isinstance(expr, Mul):
                return _fn_mul(a, b)
            return _fn_add(a, b, negate=isinstance(expr, Sub))
        case Div(left=left, right=right):
            a, b = _fn_poly(left, atom), from_expr(right)
            if a is None or b is None or not b.is_constant() or b.is_zero():
                return None
            scale = algebraic.inverse(b.constant_value())
            return {k: c.scale(scale) for k, c in a.items()}
        case Pow(base=base, exponent=n_expr):
            k = _integer_exponent(n_expr)
            b = _fn_poly(base, atom)
            if k is None or b is None or not 0 <= k <= MAX_EXPANDED_POWER:
                return None
            result: FnPoly = {0: ONE_POLY}
            for _ in range(k):
                result = _fn_mul(result, b)
            return result
    poly = from_expr(expr)
    if poly is None:
        return None
    return {} if poly.is_zero() else {0: poly}


# endregion

# region scans


def _has_bare_e(expr: Expr) -> bool:
    """True if e appears other than as the base of a power"""
    match expr:
        case Named(name=NamedConstant.E):
            return True
        case Pow(base=Named(name=NamedConstant.E), exponent=exponent):
            return _has_bare_e(exponent)
    return any(_has_bare_e(child) for child in children(expr))


def _non_algebraic_constant(lhs: Expr, rhs: Expr) -> Unclassified | None:
    nodes = list(walk(lhs)) + list(walk(rhs))
    for node in nodes:
        if isinstance(node, Pow) and node.base == Named(NamedConstant.PI):
            return Unclassified(
                UnclassifiedReason.NON_ALGEBRAIC_CONSTANT, "pi is not algebraic (appears as a power base)"
            )
    if Named(NamedConstant.PI) in nodes:
        return Unclassified(UnclassifiedReason.NON_ALGEBRAIC_CONSTANT, "pi is not algebraic (appears as a coefficient)")
    return None


def _variable_exponent(lhs: Expr, rhs: Expr) -> Unclassified | None:
    for node in list(walk(lhs)) + list(walk(rhs)):
        if isinstance(node, Pow) and has_var(node.exponent) and node.base != Named(NamedConstant.E):
            return Unclassified(
                UnclassifiedReason.VARIABLE_EXPONENT, f"x in the exponent of a base other than e: {to_source(node)}"
            )
    return None


def _unsupported(lhs: Expr, rhs: Expr, detail: str) -> Unclassified:
    if _has_bare_e(lhs) or _has_bare_e(rhs):
        return Unclassified(
            UnclassifiedReason.NON_ALGEBRAIC_CONSTANT, "e is not algebraic (appears outside an exponential)"
        )
    return Unclassified(UnclassifiedReason.UNSUPPORTED_SHAPE, detail)


# endregion

# region recognisers


def _recognise_lw(lhs: Expr, rhs: Expr) -> LWForm | None:
    """c_1 e^{alpha_1 x} + ... = c_1 e^{alpha_1} + ... with rational c_i"""
    dl, dr = _exp_poly(lhs), _exp_poly(rhs)
    if dl is None or dr is None or not dl or len(dl) != len(dr):
        return None
    pairs: list[tuple[Rational, algebraic.AlgebraicNumber]] = []
    for exponent, coefficient in dl.items():
        if exponent.degree != 1 or not algebraic.is_zero(exponent.coefficient(0)):
            return None
        if not coefficient.is_constant() or not isinstance(coefficient.constant_value(), Rational):
            return None
        alpha = exponent.leading
        if dr.get(Polynomial.constant(alpha)) != coefficient:
            return None
        pairs.append((coefficient.constant_value(), alpha))
    pairs.sort(key=lambda pair: algebraic.to_text(pair[1]))
    return LWForm(tuple(c.value for c, _ in pairs), tuple(alpha for _, alpha in pairs))


def _exp_power(arg: Polynomial) -> int | None:
    """j when arg is x^j"""
    if arg.degree >= 1 and arg == Polynomial.x().power(arg.degree):
        return arg.degree
    return None


def _recognise_cor4(lhs: Expr, rhs: Expr) -> Cor4Form | None:
    """(f(x) + a1)^k = g(x) written with an explicit power"""
    for side, other in ((lhs, rhs), (rhs, lhs)):
        if not isinstance(side, Pow):
            continue
        k = _integer_exponent(side.exponent)
        g = from_expr(other)
        atoms: set[_Atom] = set()
        if k is None or k < 1 or g is None or not _collect_atoms(side.base, atoms) or len(atoms) != 1:
            continue
        atom = atoms.pop()
        j = _exp_power(atom.arg) if atom.fn == FunctionName.EXP else (1 if atom.arg.is_x() else None)
        if atom.fn not in COR4_FUNCTIONS or j is None:
            continue
        inner = _fn_poly(side.base, atom)
        if inner is None or set(inner) - {0, 1} or inner.get(1) != ONE_POLY:
            continue
        a1 = inner.get(0, ZERO_POLY)
        if not a1.is_constant():
            continue
        return Cor4Form(atom.fn, a1.constant_value(), k, g, j)
    return None


def _power_factors(expr: Expr) -> list[PowerFactor] | None:
    match expr:
        case Mul(left=left, right=right):
            a, b = _power_factors(left), _power_factors(right)
            return None if a is None or b is None else a + b
        case Pow(base=base, exponent=exponent) if not has_var(exponent):
            beta = fold_constant(exponent)
            base_poly = from_expr(base)
            if beta is None or base_poly is None or base_poly.is_zero():
                return None
            alpha, f = base_poly.monic_split()
            return [PowerFactor(alpha, f, beta)]
    return None


def _recognise_thm4(lhs: Expr, rhs: Expr) -> Thm4Form | None:
    """(alpha_1 f_1)^beta_1 ... = g with at least one non-integer beta"""
    for side, other in ((lhs, rhs), (rhs, lhs)):
        factors = _power_factors(side)
        g = from_expr(other)
        if factors is None or g is None:
            continue
        if all(algebraic.as_integer(factor.beta) is not None for factor in factors):
            continue
        return Thm4Form(tuple(factors), g)
    return None


def _recognise_thm2(lhs: Expr, rhs: Expr) -> Thm2Form | Unclassified | None:
    dl, dr = _exp_poly(lhs), _exp_poly(rhs)
    if dl is None or dr is None:
        return None
    residual = _exp_add(dl, dr, negate=True)
    exponentials = sorted(
        ((exponent, coefficient) for exponent, coefficient in residual.items() if not exponent.is_zero()),
        key=lambda item: (item[0].degree, str(item[0])),
    )
    if not exponentials:
        return Unclassified(UnclassifiedReason.ALGEBRAIC_EQUATION, "No transcendental function of x remains")
    terms: list[ExpTerm] = []
    for exponent, coefficient in exponentials:
        alpha, f = exponent.monic_split()
        terms.append(ExpTerm(coefficient, alpha, f))
    return Thm2Form(tuple(terms), -residual.get(ZERO_POLY, ZERO_POLY))


def _recognise_function_poly(lhs: Expr, rhs: Expr) -> EquationForm:
    """Cor3, Cor2, Cor5 and Cor1: a polynomial in a single function term"""
    atoms: set[_Atom] = set()
    if not (_collect_atoms(lhs, atoms) and _collect_atoms(rhs, atoms)) or not atoms:
        return _unsupported(lhs, rhs, "Not a polynomial in x and a single function term")
    if len(atoms) > 1:
        names = ", ".join(sorted({str(atom.fn) for atom in atoms}))
        return Unclassified(UnclassifiedReason.MIXED_FUNCTIONS, f"More than one function term ({names})")
    atom = atoms.pop()
    dl, dr = _fn_poly(lhs, atom), _fn_poly(rhs, atom)
    if dl is None or dr is None:
        return _unsupported(lhs, rhs, f"Not a polynomial in {atom.fn}(...)")
    residual = _fn_add(dl, dr, negate=True)
    degree = max(residual, default=0)
    if degree == 0:
        return Unclassified(UnclassifiedReason.ALGEBRAIC_EQUATION, "The function terms cancel")

    constant_term = -residual.get(0, ZERO_POLY)
    leading = residual[degree]
    if atom.fn in COR3_FUNCTIONS:
        if degree == 1 and atom.arg.is_x() and leading.is_constant():
            return Cor3Form(atom.fn, constant_term.scale(algebraic.inverse(leading.constant_value())))
        return Unclassified(UnclassifiedReason.UNSUPPORTED_SHAPE, f"{atom.fn}(x) must appear once, linearly")
    if degree == 1 and atom.fn in COR2_FUNCTIONS:
        return Cor2Form(atom.fn, leading, atom.arg, constant_term)

    in_fn = all(residual.get(k, ZERO_POLY).is_constant() for k in range(1, degree + 1))
    if not in_fn or not atom.arg.is_x():
        return Unclassified(
            UnclassifiedReason.UNSUPPORTED_SHAPE, f"Coefficients of powers of {atom.fn}(x) must be constants"
        )
    g = Polynomial((algebraic.ZERO,) + tuple(residual.get(k, ZERO_POLY).constant_value() for k in range(1, degree + 1)))
    if 1 <= degree <= 4 and atom.fn in COR5_FUNCTIONS:
        return FunctionPolyForm(FormKind.COR5, atom.fn, g, constant_term)
    if atom.fn in COR1_FUNCTIONS:
        return FunctionPolyForm(FormKind.COR1, atom.fn, g, constant_term)
    return Unclassified(UnclassifiedReason.UNSUPPORTED_SHAPE, f"No form covers polynomials in {atom.fn}(x)")


# endregion


def _classify(lhs: Expr, rhs: Expr) -> EquationForm:
    rejected = _non_algebraic_constant(lhs, rhs) or _variable_exponent(lhs, rhs)
    if rejected is not None:
        return rejected
    for recognise in (_recognise_lw, _recognise_cor4, _recognise_thm4, _recognise_thm2):
        form = recognise(lhs, rhs)
        if form is not None:
            return form
    return _recognise_function_poly(lhs, rhs)


def classify(lhs: Expr, rhs: Expr) -> EquationForm:
    """Normalised form of lhs = rhs. Total: anything outside the supported families is Unclassified."""
    try:
        form = _classify(lhs, rhs)
    except NotRepresentable as exc:
        form = Unclassified(UnclassifiedReason.NON_REPRESENTABLE_COEFFICIENT, str(exc))
    logger.debug(f"Classified '{Equation(lhs, rhs)}' as {form.kind}")
    return form
