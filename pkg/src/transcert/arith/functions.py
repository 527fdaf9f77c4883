"""Elementary functions over real and complex balls.

Real monotone functions are evaluated at both (outward rounded) endpoints with directed MPFR rounding so the
result encloses the true image. sin/cos use their midpoint value plus the input radius (Lipschitz constant 1).
Complex functions are composed from the real ones using the usual rectangular formulas, principal branches
throughout."""

from enum import StrEnum, auto
from functools import lru_cache
from typing import Callable, Union

import gmpy2
from gmpy2 import mpfr

from transcert.arith.complex import BallComplex, cpow_int
from transcert.arith.real import BallReal, pow_int
from transcert.arith.rounding import DOWN, UP, rounding
from transcert.error import BranchCutStraddle, DivisorMayBeZero, DomainViolation

Ball = Union[BallReal, BallComplex]


class FunctionName(StrEnum):
    EXP = auto()
    LN = auto()
    SQRT = auto()
    SIN = auto()
    COS = auto()
    TAN = auto()
    COT = auto()
    SEC = auto()
    CSC = auto()
    SINH = auto()
    COSH = auto()
    TANH = auto()
    COTH = auto()
    ASIN = auto()
    ACOS = auto()
    ATAN = auto()
    ACOT = auto()
    ASEC = auto()
    ACSC = auto()


class NamedConstant(StrEnum):
    E = auto()
    PI = auto()


class BinaryOp(StrEnum):
    ADD = "+"
    SUB = "-"
    MUL = "*"
    DIV = "/"
    POW = "^"


TRIGONOMETRIC = frozenset(
    {FunctionName.SIN, FunctionName.COS, FunctionName.TAN, FunctionName.COT, FunctionName.SEC, FunctionName.CSC}
)
HYPERBOLIC = frozenset({FunctionName.SINH, FunctionName.COSH, FunctionName.TANH, FunctionName.COTH})
ARC_FUNCTIONS = frozenset(
    {
        FunctionName.ASIN,
        FunctionName.ACOS,
        FunctionName.ATAN,
        FunctionName.ACOT,
        FunctionName.ASEC,
        FunctionName.ACSC,
    }
)


# region constants


def _euler() -> mpfr:
    return gmpy2.exp(1)


@lru_cache(maxsize=64)
def const(name: NamedConstant, prec: int) -> BallReal:
    """A ball of width at most a few ulps at prec containing e or pi"""
    match name:
        case NamedConstant.PI:
            compute: Callable[[], mpfr] = gmpy2.const_pi
        case NamedConstant.E:
            compute = _euler
        case _:
            raise ValueError(f"Unsupported constant {name}")
    with rounding(prec, DOWN):
        lo = compute()
    with rounding(prec, UP):
        hi = compute()
    return BallReal.from_bounds(lo, hi, prec)


def half_pi(prec: int) -> BallReal:
    return const(NamedConstant.PI, prec) / 2


# endregion

# region real functions


def _monotone(x: BallReal, fn: Callable[[mpfr], mpfr], increasing: bool) -> BallReal:
    """Image of a monotone fn over x, evaluated at outward rounded endpoints with directed rounding"""
    if not x.is_finite():
        return BallReal.whole(x.prec)
    lo, hi = x.lower(), x.upper()
    if not increasing:
        lo, hi = hi, lo
    with rounding(x.prec, DOWN):
        f_lo = fn(lo)
    with rounding(x.prec, UP):
        f_hi = fn(hi)
    if gmpy2.is_nan(f_lo) or gmpy2.is_nan(f_hi):
        raise DomainViolation(f"Function undefined over {x}")
    if not (gmpy2.is_finite(f_lo) and gmpy2.is_finite(f_hi)):
        return BallReal.whole(x.prec)
    return BallReal.from_bounds(f_lo, f_hi, x.prec)


def _lipschitz_one(x: BallReal, fn: Callable[[mpfr], mpfr]) -> BallReal:
    """Image of fn (with |fn'| <= 1 everywhere) over x"""
    if not x.is_finite():
        return BallReal.from_bounds(-1, 1, x.prec)
    with rounding(x.prec, DOWN):
        f_lo = fn(x.mid)
    with rounding(x.prec, UP):
        f_hi = fn(x.mid)
    at_mid = BallReal.from_bounds(f_lo, f_hi, x.prec)
    return at_mid + BallReal(mpfr(0), x.rad, x.prec)


def real_exp(x: BallReal) -> BallReal:
    return _monotone(x, gmpy2.exp, increasing=True)


def real_ln(x: BallReal) -> BallReal:
    if not x.is_positive():
        raise DomainViolation(f"ln requires a positive argument, got {x}")
    return _monotone(x, gmpy2.log, increasing=True)


def real_sqrt(x: BallReal) -> BallReal:
    if x.is_exact_zero():
        return x
    if not x.is_finite() or x.lower_exact() < 0:
        raise DomainViolation(f"sqrt requires a nonnegative argument, got {x}")
    return _monotone(x, gmpy2.sqrt, increasing=True)


def real_sin(x: BallReal) -> BallReal:
    return _lipschitz_one(x, gmpy2.sin)


def real_cos(x: BallReal) -> BallReal:
    return _lipschitz_one(x, gmpy2.cos)


def real_tan(x: BallReal) -> BallReal:
    if real_cos(x).contains_zero():
        raise DomainViolation(f"tan may hit a pole over {x}")
    return _monotone(x, gmpy2.tan, increasing=True)


def real_cot(x: BallReal) -> BallReal:
    if real_sin(x).contains_zero():
        raise DomainViolation(f"cot may hit a pole over {x}")
    return _monotone(x, gmpy2.cot, increasing=False)


def _reciprocal(value: BallReal, name: str) -> BallReal:
    try:
        return 1 / value
    except DivisorMayBeZero:
        raise DomainViolation(f"{name} may hit a pole") from None


def real_sec(x: BallReal) -> BallReal:
    return _reciprocal(real_cos(x), "sec")


def real_csc(x: BallReal) -> BallReal:
    return _reciprocal(real_sin(x), "csc")


def real_sinh(x: BallReal) -> BallReal:
    return _monotone(x, gmpy2.sinh, increasing=True)


def real_cosh(x: BallReal) -> BallReal:
    if x.is_positive():
        return _monotone(x, gmpy2.cosh, increasing=True)
    if x.is_negative():
        return _monotone(x, gmpy2.cosh, increasing=False)
    # Straddles zero: minimum 1 at 0, maximum at the endpoint furthest from 0
    with rounding(x.prec, UP):
        hi = gmpy2.cosh(x.magnitude())
    return BallReal.from_bounds(1, hi, x.prec)


def real_tanh(x: BallReal) -> BallReal:
    return _monotone(x, gmpy2.tanh, increasing=True)


def real_coth(x: BallReal) -> BallReal:
    if x.contains_zero():
        raise DomainViolation(f"coth has a pole at 0, argument {x}")
    return _monotone(x, gmpy2.coth, increasing=False)


def _require_unit_interval(x: BallReal, name: str) -> None:
    if not x.is_finite() or x.lower_exact() < -1 or x.upper_exact() > 1:
        raise DomainViolation(f"{name} requires an argument in [-1, 1], got {x}")


def real_asin(x: BallReal) -> BallReal:
    _require_unit_interval(x, "asin")
    return _monotone(x, gmpy2.asin, increasing=True)


def real_acos(x: BallReal) -> BallReal:
    _require_unit_interval(x, "acos")
    return _monotone(x, gmpy2.acos, increasing=False)


def real_atan(x: BallReal) -> BallReal:
    return _monotone(x, gmpy2.atan, increasing=True)


def real_acot(x: BallReal) -> BallReal:
    return half_pi(x.prec) - real_atan(x)


def real_asec(x: BallReal) -> BallReal:
    return real_acos(_reciprocal(x, "asec"))


def real_acsc(x: BallReal) -> BallReal:
    return real_asin(_reciprocal(x, "acsc"))


REAL_FUNCTIONS: dict[FunctionName, Callable[[BallReal], BallReal]] = {
    FunctionName.EXP: real_exp,
    FunctionName.LN: real_ln,
    FunctionName.SQRT: real_sqrt,
    FunctionName.SIN: real_sin,
    FunctionName.COS: real_cos,
    FunctionName.TAN: real_tan,
    FunctionName.COT: real_cot,
    FunctionName.SEC: real_sec,
    FunctionName.CSC: real_csc,
    FunctionName.SINH: real_sinh,
    FunctionName.COSH: real_cosh,
    FunctionName.TANH: real_tanh,
    FunctionName.COTH: real_coth,
    FunctionName.ASIN: real_asin,
    FunctionName.ACOS: real_acos,
    FunctionName.ATAN: real_atan,
    FunctionName.ACOT: real_acot,
    FunctionName.ASEC: real_asec,
    FunctionName.ACSC: real_acsc,
}

# endregion

# region complex functions


def complex_exp(z: BallComplex) -> BallComplex:
    if z.is_real():
        return BallComplex.from_real(real_exp(z.re))
    modulus = real_exp(z.re)
    return BallComplex(modulus * real_cos(z.im), modulus * real_sin(z.im))


def complex_arg(z: BallComplex) -> BallReal:
    """Principal argument in (-pi, pi]"""
    re, im = z.re, z.im
    prec = z.prec
    if im.is_exact_zero():
        if re.is_positive():
            return BallReal.zero(prec)
        if re.is_negative():
            return const(NamedConstant.PI, prec)
        raise DomainViolation(f"arg is undefined at 0, argument {z}")
    if re.is_positive():
        return real_atan(im / re)
    if im.is_positive():
        return half_pi(prec) - real_atan(re / im)
    if im.is_negative():
        return -half_pi(prec) - real_atan(re / im)
    if re.is_negative():
        raise BranchCutStraddle(f"{z} straddles the negative real axis")
    raise DomainViolation(f"{z} may contain 0")


def complex_ln(z: BallComplex) -> BallComplex:
    if z.is_real() and z.re.is_positive():
        return BallComplex.from_real(real_ln(z.re))
    arg = complex_arg(z)
    if z.is_real():
        log_modulus = real_ln(abs(z.re))
    else:
        log_modulus = real_ln(z.abs_squared()) / 2
    return BallComplex(log_modulus, arg)


def complex_sqrt(z: BallComplex) -> BallComplex:
    if z.is_real():
        if z.re.is_exact_zero():
            return z
        if z.re.lower_exact() >= 0:
            return BallComplex.from_real(real_sqrt(z.re))
        if z.re.is_negative():
            return BallComplex(BallReal.zero(z.prec), real_sqrt(-z.re))
    return complex_exp(complex_ln(z) / 2)


def complex_sin(z: BallComplex) -> BallComplex:
    a, b = z.re, z.im
    return BallComplex(real_sin(a) * real_cosh(b), real_cos(a) * real_sinh(b))


def complex_cos(z: BallComplex) -> BallComplex:
    a, b = z.re, z.im
    return BallComplex(real_cos(a) * real_cosh(b), -(real_sin(a) * real_sinh(b)))


def complex_sinh(z: BallComplex) -> BallComplex:
    a, b = z.re, z.im
    return BallComplex(real_sinh(a) * real_cos(b), real_cosh(a) * real_sin(b))


def complex_cosh(z: BallComplex) -> BallComplex:
    a, b = z.re, z.im
    return BallComplex(real_cosh(a) * real_cos(b), real_sinh(a) * real_sin(b))


def _complex_quotient(num: BallComplex, den: BallComplex, name: str) -> BallComplex:
    try:
        return num / den
    except DivisorMayBeZero:
        raise DomainViolation(f"{name} may hit a pole") from None


def complex_tan(z: BallComplex) -> BallComplex:
    return _complex_quotient(complex_sin(z), complex_cos(z), "tan")


def complex_cot(z: BallComplex) -> BallComplex:
    return _complex_quotient(complex_cos(z), complex_sin(z), "cot")


def complex_sec(z: BallComplex) -> BallComplex:
    return _complex_quotient(BallComplex.exact(1, 0, z.prec), complex_cos(z), "sec")


def complex_csc(z: BallComplex) -> BallComplex:
    return _complex_quotient(BallComplex.exact(1, 0, z.prec), complex_sin(z), "csc")


def complex_tanh(z: BallComplex) -> BallComplex:
    return _complex_quotient(complex_sinh(z), complex_cosh(z), "tanh")


def complex_coth(z: BallComplex) -> BallComplex:
    return _complex_quotient(complex_cosh(z), complex_sinh(z), "coth")


def _times_i(z: BallComplex) -> BallComplex:
    return BallComplex(-z.im, z.re)


def complex_asin(z: BallComplex) -> BallComplex:
    # asin z = -i ln(iz + sqrt(1 - z^2))
    one = BallComplex.exact(1, 0, z.prec)
    inner = _times_i(z) + complex_sqrt(one - z.square())
    result = complex_ln(inner)
    return BallComplex(result.im, -result.re)


def complex_acos(z: BallComplex) -> BallComplex:
    return BallComplex.from_real(half_pi(z.prec)) - complex_asin(z)


def complex_atan(z: BallComplex) -> BallComplex:
    # atan z = (i/2) (ln(1 - iz) - ln(1 + iz))
    one = BallComplex.exact(1, 0, z.prec)
    iz = _times_i(z)
    difference = complex_ln(one - iz) - complex_ln(one + iz)
    return _times_i(difference) / 2


def complex_acot(z: BallComplex) -> BallComplex:
    return BallComplex.from_real(half_pi(z.prec)) - complex_atan(z)


def complex_asec(z: BallComplex) -> BallComplex:
    return complex_acos(_complex_quotient(BallComplex.exact(1, 0, z.prec), z, "asec"))


def complex_acsc(z: BallComplex) -> BallComplex:
    return complex_asin(_complex_quotient(BallComplex.exact(1, 0, z.prec), z, "acsc"))


COMPLEX_FUNCTIONS: dict[FunctionName, Callable[[BallComplex], BallComplex]] = {
    FunctionName.EXP: complex_exp,
    FunctionName.LN: complex_ln,
    FunctionName.SQRT: complex_sqrt,
    FunctionName.SIN: complex_sin,
    FunctionName.COS: complex_cos,
    FunctionName.TAN: complex_tan,
    FunctionName.COT: complex_cot,
    FunctionName.SEC: complex_sec,
    FunctionName.CSC: complex_csc,
    FunctionName.SINH: complex_sinh,
    FunctionName.COSH: complex_cosh,
    FunctionName.TANH: complex_tanh,
    FunctionName.COTH: complex_coth,
    FunctionName.ASIN: complex_asin,
    FunctionName.ACOS: complex_acos,
    FunctionName.ATAN: complex_atan,
    FunctionName.ACOT: complex_acot,
    FunctionName.ASEC: complex_asec,
    FunctionName.ACSC: complex_acsc,
}

# endregion


def _is_integer_exponent(exponent: Ball) -> int | None:
    """The exponent as an int if it is an exact (rad 0, imag 0) integer"""
    value = exponent.re if isinstance(exponent, BallComplex) else exponent
    if isinstance(exponent, BallComplex) and not exponent.is_real():
        return None
    if value.is_exact() and value.is_finite() and gmpy2.is_integer(value.mid):
        return int(value.mid)
    return None


def ball_pow(base: Ball, exponent: Ball) -> Ball:
    """base^exponent. Exact integer exponents use repeated squaring (any sign), everything else goes through
    exp(exponent * ln(base)) on the principal branch (for real balls this needs base > 0)"""
    n = _is_integer_exponent(exponent)
    if n is not None:
        if isinstance(base, BallComplex):
            return cpow_int(base, n)
        return pow_int(base, n)
    if isinstance(base, BallReal) and isinstance(exponent, BallReal):
        return real_exp(exponent * real_ln(base))
    base_c = base if isinstance(base, BallComplex) else BallComplex.from_real(base)
    return complex_exp(exponent * complex_ln(base_c))


def ball_unary(fn: FunctionName, value: Ball) -> Ball:
    if isinstance(value, BallComplex):
        return COMPLEX_FUNCTIONS[fn](value)
    return REAL_FUNCTIONS[fn](value)


def ball_binary(op: BinaryOp, a: Ball, b: Ball) -> Ball:
    match op:
        case BinaryOp.ADD:
            return a + b
        case BinaryOp.SUB:
            return a - b
        case BinaryOp.MUL:
            return a * b
        case BinaryOp.DIV:
            return a / b
        case BinaryOp.POW:
            return ball_pow(a, b)
    raise ValueError(f"Unsupported operator {op}")
