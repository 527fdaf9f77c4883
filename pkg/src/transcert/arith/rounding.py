"""Thin helpers around gmpy2 (MPFR) contexts.

Every mpfr operation rounds its result to the precision / rounding mode of the *current* context, including
negation and abs. Code in this package therefore never does mpfr arithmetic outside one of the contexts
created here."""

from fractions import Fraction

import gmpy2
from gmpy2 import mpfr, mpq

from transcert.constants import RAD_PREC

NEAREST = gmpy2.RoundToNearest
DOWN = gmpy2.RoundDown  # towards -inf
UP = gmpy2.RoundUp  # towards +inf


def rounding(prec: int, rnd: int = NEAREST) -> gmpy2.context:
    """A context with the full MPFR exponent range - overflow/underflow are not a concern at desk scale"""
    return gmpy2.context(
        precision=prec,
        round=rnd,
        emin=gmpy2.get_emin_min(),
        emax=gmpy2.get_emax_max(),
        subnormalize=False,
    )


def rad_up() -> gmpy2.context:
    """The context used for all radius arithmetic"""
    return rounding(RAD_PREC, UP)


def rad_down() -> gmpy2.context:
    return rounding(RAD_PREC, DOWN)


def to_mpq(value: int | Fraction | mpq | mpfr) -> mpq:
    """Exact conversion to a GMP rational"""
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    return mpq(value)


def to_fraction(value: mpfr | mpq) -> Fraction:
    """Exact conversion of a dyadic / GMP rational to a Fraction"""
    num, den = value.as_integer_ratio()
    return Fraction(int(num), int(den))


def round_value(value: int | Fraction | mpq | mpfr, prec: int, rnd: int = NEAREST) -> mpfr:
    """Rounds an exact value to prec bits using rnd"""
    exact = to_mpq(value) if isinstance(value, Fraction) else value
    with rounding(prec, rnd):
        return gmpy2.mpfr(exact)


def ulp(value: mpfr, prec: int) -> mpfr:
    """One unit in the last place of value at prec bits (as an exact power of two)"""
    if value == 0:
        return mpfr(0)
    with rad_up():
        return gmpy2.exp2(gmpy2.get_exp(value) - prec)


def rounding_error(result: mpfr, prec: int) -> mpfr:
    """Upper bound on |exact - result| for a result produced by a correctly rounded MPFR operation at prec bits.
    Relies on the ternary code - exact results carry no error."""
    if result.rc == 0:
        return mpfr(0)
    return ulp(result, prec)


def to_hex(value: mpfr) -> str:
    """Exact, unambiguous hex-float rendering (C99 style, integer mantissa) eg 0x1fp-3"""
    if gmpy2.is_infinite(value):
        return "inf" if value > 0 else "-inf"
    num, den = value.as_integer_ratio()
    if num == 0:
        return "0x0p+0"
    exp = int(den).bit_length() - 1  # den is always a power of two
    sign = "-" if num < 0 else ""
    mantissa = abs(int(num))
    while mantissa % 2 == 0:
        mantissa //= 2
        exp -= 1
    return f"{sign}0x{mantissa:x}p{-exp:+d}"


def from_hex(text: str) -> Fraction:
    """Inverse of to_hex"""
    text = text.strip().lower()
    sign = -1 if text.startswith("-") else 1
    text = text.lstrip("+-")
    if not text.startswith("0x") or "p" not in text:
        raise ValueError(f"'{text}' is not a hex-float string")
    mantissa_text, exp_text = text[2:].split("p")
    mantissa = int(mantissa_text, 16)
    exp = int(exp_text)
    if exp >= 0:
        return Fraction(sign * mantissa * 2**exp)
    return Fraction(sign * mantissa, 2**-exp)
